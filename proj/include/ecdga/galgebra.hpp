#pragma once

/**
 * @file galgebra.hpp
 * @brief The group algebra F_q[G] of a finite abelian group.
 *
 * Elements are dense coefficient vectors over F_q indexed by group-element
 * rank; index 0 is the identity, so coeffs[0] is λ₁(e).
 *
 * Primitive idempotents come from the character table of G with values in
 * F_{q^l}. The character indexed by a dual exponent vector a is
 *
 *     χ_a(g) = θ^{Σ a_i g_i exp(G)/d_i},     θ of order exp(G),
 *
 * and e_χ = |G|^{-1} Σ_g χ(g^{-1}) g. Summing e_χ over a q-power orbit
 * {a, qa, q²a, ...} of the dual group gives an idempotent with all
 * coefficients in F_q, which generates a minimal ideal of dimension equal
 * to the orbit size. Dimensions are confirmed by an independent rank
 * computation over F_q.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "ecdga/abgroup.hpp"
#include "ecdga/ffield.hpp"
#include "ecdga/orbits.hpp"

namespace ecdga {

inline constexpr u64 kDefaultRankCap = 4096;

namespace detail {

struct AlgebraContext {
    AbelianGroup group;
    std::shared_ptr<const BaseField> field;
    // digits[r * k + i] = i-th exponent of the element of rank r
    std::vector<u64> digits;
    std::vector<u64> weights;

    AlgebraContext(AbelianGroup g, std::shared_ptr<const BaseField> f) : group(std::move(g)), field(std::move(f)) {
        const auto& ds = group.factor_orders();
        const std::size_t k = ds.size();
        weights.assign(k, 1);
        for (std::size_t i = k - 1; i-- > 0;) weights[i] = weights[i + 1] * ds[i + 1];
        const u64 n = group.order();
        digits.resize(n * k);
        for (u64 r = 0; r < n; ++r) {
            u64 v = r;
            for (std::size_t i = k; i-- > 0;) {
                digits[r * k + i] = v % ds[i];
                v /= ds[i];
            }
        }
    }

    u64 product_rank(u64 a, u64 b) const {
        const auto& ds = group.factor_orders();
        const std::size_t k = ds.size();
        u64 r = 0;
        for (std::size_t i = 0; i < k; ++i) {
            u64 s = digits[a * k + i] + digits[b * k + i];
            if (s >= ds[i]) s -= ds[i];
            r += s * weights[i];
        }
        return r;
    }
};

}  // namespace detail

struct AlgebraElement {
    std::shared_ptr<const detail::AlgebraContext> ctx;
    std::vector<u64> coeffs;

    const AbelianGroup& group() const { return ctx->group; }
    const BaseField& field() const { return *ctx->field; }
    /// λ₁(e), the coefficient at the identity.
    u64 identity_coefficient() const { return coeffs.at(0); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs == b.coeffs; }
};

class GroupAlgebra {
public:
    GroupAlgebra(u64 q, AbelianGroup G, u64 seed = kDefaultSeed)
        : GroupAlgebra(make_field(q, seed), std::move(G)) {}

    GroupAlgebra(std::shared_ptr<const BaseField> field, AbelianGroup G)
        : ctx_(std::make_shared<const detail::AlgebraContext>(std::move(G), std::move(field))) {
        check_enumerable(ctx_->group);
    }

    const AbelianGroup& group() const { return ctx_->group; }
    const BaseField& field() const { return *ctx_->field; }
    std::shared_ptr<const BaseField> field_ptr() const { return ctx_->field; }
    u64 q() const { return ctx_->field->order(); }
    u64 p() const { return ctx_->field->characteristic(); }
    u64 dimension() const { return group().order(); }

    AlgebraElement zero() const { return {ctx_, std::vector<u64>(dimension(), 0)}; }
    AlgebraElement one() const { return basis(0); }
    AlgebraElement basis(u64 rank) const {
        AlgebraElement e = zero();
        e.coeffs.at(rank) = field().one();
        return e;
    }
    AlgebraElement basis(const GroupElement& g) const { return basis(group().rank(g)); }

    AlgebraElement from_coeffs(std::vector<u64> coeffs) const {
        if (coeffs.size() != dimension()) fail(ErrorKind::AlgebraMismatch, "coefficient vector has wrong length");
        for (u64 c : coeffs)
            if (c >= q()) fail(ErrorKind::AlgebraMismatch, "coefficient outside F_q");
        return {ctx_, std::move(coeffs)};
    }

    /// |G|^{-1} Σ_g g, the idempotent of the trivial character.
    AlgebraElement averaging_idempotent() const {
        const u64 inv = field().inv(field().from_int(dimension() % p()));
        return {ctx_, std::vector<u64>(dimension(), inv)};
    }

    bool owns(const AlgebraElement& e) const { return e.ctx == ctx_; }

private:
    static std::shared_ptr<const BaseField> make_field(u64 q, u64 seed) {
        auto qq = PrimePowerQ::from(q);
        return std::make_shared<const BaseField>(qq.p, qq.alpha, seed);
    }

    std::shared_ptr<const detail::AlgebraContext> ctx_;
};

namespace detail {

inline void require_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.ctx != b.ctx && !(a.ctx->group == b.ctx->group && a.ctx->field->order() == b.ctx->field->order() &&
                            a.ctx->field->modulus() == b.ctx->field->modulus()))
        fail(ErrorKind::AlgebraMismatch, "elements belong to different group algebras");
}

}  // namespace detail

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    detail::require_same(a, b);
    AlgebraElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.field().add(a.coeffs[i], b.coeffs[i]);
    return r;
}

inline AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    detail::require_same(a, b);
    AlgebraElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = a.field().sub(a.coeffs[i], b.coeffs[i]);
    return r;
}

/// Convolution: (ab)_k = Σ_{gh = k} a_g b_h.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    detail::require_same(a, b);
    const auto& F = a.field();
    const auto& ctx = *a.ctx;
    AlgebraElement r{a.ctx, std::vector<u64>(a.coeffs.size(), 0)};
    for (u64 i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (u64 j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            const u64 k = ctx.product_rank(i, j);
            r.coeffs[k] = F.add(r.coeffs[k], F.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return r;
}

inline bool is_idempotent(const AlgebraElement& e) { return multiply(e, e) == e; }

/// dim_{F_q} of F_q[G]·e: rank of the rows {g·e : g ∈ G}, by exact
/// row reduction over F_q.
inline u64 ideal_dimension_oracle(const AlgebraElement& e, u64 cap = kDefaultRankCap) {
    const u64 n = e.coeffs.size();
    if (n > cap)
        fail(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(n) + " exceeds rank cap " + std::to_string(cap));
    const auto& F = e.field();
    const auto& ctx = *e.ctx;
    std::vector<std::vector<u64>> basis;
    std::vector<u64> pivots;
    std::vector<u64> row(n);
    for (u64 g = 0; g < n && basis.size() < n; ++g) {
        std::fill(row.begin(), row.end(), 0);
        for (u64 h = 0; h < n; ++h)
            if (e.coeffs[h] != 0) row[ctx.product_rank(g, h)] = e.coeffs[h];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const u64 c = row[pivots[b]];
            if (c == 0) continue;
            const auto& v = basis[b];
            for (u64 j = pivots[b]; j < n; ++j)
                if (v[j] != 0) row[j] = F.sub(row[j], F.mul(c, v[j]));
        }
        u64 piv = 0;
        while (piv < n && row[piv] == 0) ++piv;
        if (piv == n) continue;
        const u64 inv = F.inv(row[piv]);
        for (u64 j = piv; j < n; ++j) row[j] = F.mul(row[j], inv);
        basis.push_back(row);
        pivots.push_back(piv);
    }
    return basis.size();
}

/// Least r in {1, ..., p} with r ≡ |G|·λ₁(e) (mod p). Equals dim F_q[G]·e
/// whenever that dimension is at most p.
inline u64 ecd_dimension(const AlgebraElement& e) {
    if (!is_idempotent(e)) fail(ErrorKind::NotIdempotent, "ecd_dimension needs an idempotent");
    const auto& F = e.field();
    const u64 lambda1 = e.identity_coefficient();
    if (!F.in_prime_field(lambda1))
        fail(ErrorKind::CoefficientNotRational, "λ₁(e) does not lie in the prime field");
    const u64 p = F.characteristic();
    const u64 r = static_cast<u64>((u128{e.group().order() % p} * lambda1) % p);
    return r == 0 ? p : r;
}

/// ecd_dimension cross-checked against the rank oracle.
inline u64 ecd_dimension_checked(const AlgebraElement& e, u64 cap = kDefaultRankCap) {
    const u64 shortcut = ecd_dimension(e);
    const u64 oracle = ideal_dimension_oracle(e, cap);
    if (shortcut != oracle)
        fail(ErrorKind::DimensionExceedsP, "shortcut gives " + std::to_string(shortcut) + " but the ideal has dimension " +
                                               std::to_string(oracle) + " > p");
    return shortcut;
}

struct MinimalIdealReport {
    QOrbit orbit;  // q-orbit of the dual group indexing the characters
    AlgebraElement idempotent;
    u64 dimension = 0;
};

/// Primitive idempotents of F_q[G], one per q-orbit of the dual group,
/// ordered by the orbit representative's rank. `Fl` must be an extension of
/// the algebra's own F_q that contains a primitive exp(G)-th root of unity.
inline std::vector<MinimalIdealReport> primitive_idempotents(const GroupAlgebra& A, const FieldTower& Fl,
                                                             u64 rank_cap = kDefaultRankCap,
                                                             u64 seed = kDefaultSeed) {
    const AbelianGroup& G = A.group();
    const BaseField& Fq = A.field();
    const u64 q = A.q();
    require_semisimple(q, G);
    if (G.order() > rank_cap)
        fail(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(G.order()) + " exceeds rank cap");
    if (Fl.q() != q || Fl.base().modulus() != Fq.modulus())
        fail(ErrorKind::AlgebraMismatch, "splitting field is not built over the algebra's F_q");

    const auto& ext = Fl.ext();
    const u64 n = G.order();
    const u64 E = G.exponent();
    const auto& ds = G.factor_orders();
    const std::size_t k = ds.size();

    const auto theta = primitive_root_of_unity(Fl, E, seed);
    std::vector<ExtensionField::Elem> theta_pow(E);
    theta_pow[0] = ext.one();
    for (u64 j = 1; j < E; ++j) theta_pow[j] = ext.mul(theta_pow[j - 1], theta);

    // digit[r * k + i] = g_i and scaled[r * k + i] = g_i · E / d_i for the element g of rank r
    std::vector<u64> digit(n * k), scaled(n * k);
    for (u64 r = 0; r < n; ++r) {
        GroupElement g = G.element_at(r);
        for (std::size_t i = 0; i < k; ++i) {
            digit[r * k + i] = g.exponents[i];
            scaled[r * k + i] = g.exponents[i] * (E / ds[i]);
        }
    }

    const u64 n_inv = Fq.inv(Fq.from_int(n % Fq.characteristic()));
    OrbitPartition dual = orbit_partition(q, G);
    std::sort(dual.orbits.begin(), dual.orbits.end(), [&G](const QOrbit& a, const QOrbit& b) {
        return G.rank(a.representative) < G.rank(b.representative);
    });

    std::vector<MinimalIdealReport> out;
    out.reserve(dual.orbits.size());
    for (auto& orbit : dual.orbits) {
        std::vector<u64> coeffs(n);
        for (u64 g = 0; g < n; ++g) {
            ExtensionField::Elem acc = ext.zero();
            for (u64 a : orbit.member_ranks) {
                // χ_a(g^{-1}) = θ^{-<a, g>}
                u128 pairing = 0;
                for (std::size_t i = 0; i < k; ++i) pairing += u128{digit[a * k + i]} * scaled[g * k + i];
                const u64 expo = static_cast<u64>(pairing % E);
                acc = ext.add(acc, theta_pow[expo == 0 ? 0 : E - expo]);
            }
            if (!ext.in_base(acc))
                fail(ErrorKind::CoefficientNotRational, "orbit sum has a coefficient outside F_q");
            coeffs[g] = Fq.mul(n_inv, acc[0]);
        }
        MinimalIdealReport rep{std::move(orbit), A.from_coeffs(std::move(coeffs)), 0};
        rep.dimension = rep.orbit.size;
        const u64 oracle = ideal_dimension_oracle(rep.idempotent, rank_cap);
        if (oracle != rep.dimension)
            fail(ErrorKind::PredicateMismatch, "orbit size " + std::to_string(rep.dimension) +
                                                   " disagrees with ideal rank " + std::to_string(oracle));
        out.push_back(std::move(rep));
    }
    return out;
}

/// Builds F_{q^l} over the algebra's own F_q and computes the idempotents.
inline std::vector<MinimalIdealReport> primitive_idempotents(const GroupAlgebra& A, u64 rank_cap = kDefaultRankCap,
                                                             u64 seed = kDefaultSeed) {
    const u64 l = global_l(A.q(), A.group());
    if (A.group().order() > rank_cap)
        fail(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(A.group().order()) + " exceeds rank cap");
    FieldTower Fl(A.field_ptr(), static_cast<unsigned>(l), seed);
    return primitive_idempotents(A, Fl, rank_cap, seed);
}

/// Multiset of minimal-ideal dimensions, ascending; read off the orbit sizes.
inline std::vector<u64> minimal_ideal_dimensions(u64 q, const AbelianGroup& G, u64 cap = kDefaultEnumerationCap) {
    return orbit_partition(q, G, cap).sizes();
}

}  // namespace ecdga
