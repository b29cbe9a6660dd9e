#pragma once

/**
 * @file classify.hpp
 * @brief Decision procedures for ECD and minimal ECD group algebras, and
 *        the divisor-lattice construction of minimal ECD algebras.
 *
 * F_q[G] is an ECD algebra iff |G| <= p + 1 and |G| != p. In the semisimple
 * case it is minimal ECD iff l <= p. Three cheaper sufficient conditions are
 * reported alongside: a splitting degree t <= p, φ(exp G) <= p, and its
 * specialization b^{a-1}(b-1) <= p for b-groups of exponent b^a.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ecdga/abgroup.hpp"
#include "ecdga/arith.hpp"
#include "ecdga/orbits.hpp"

namespace ecdga {

enum class SufficientCondition { SplittingDegreeLeP, TotientLeP, ElementaryAbelianBound };

constexpr std::string_view to_string(SufficientCondition c) {
    switch (c) {
        case SufficientCondition::SplittingDegreeLeP: return "splitting_degree_le_p";
        case SufficientCondition::TotientLeP: return "totient_le_p";
        case SufficientCondition::ElementaryAbelianBound: return "elementary_abelian_bound";
    }
    return "unknown";
}

struct ClassificationReport {
    u64 p = 0;
    u64 q = 0;
    std::string group_spec;
    std::string canonical_spec;
    u64 order = 0;
    u64 exponent = 0;
    u64 l = 0;
    u64 phi_exp = 0;
    u64 splitting_degree = 0;  // the t used for the splitting-degree condition
    bool is_semisimple = false;
    bool is_ecd_algebra = false;
    bool is_minimal_ecd = false;
    std::vector<SufficientCondition> sufficient_conditions_fired;
    GroupElement witness;  // element of order exp(G)
    u64 witness_t = 0;

    bool fired(SufficientCondition c) const {
        return std::find(sufficient_conditions_fired.begin(), sufficient_conditions_fired.end(), c) !=
               sufficient_conditions_fired.end();
    }
};

/// |G| <= p + 1 and |G| != p.
inline bool is_ecd_algebra(u64 q, const AbelianGroup& G) {
    const u64 p = PrimePowerQ::from(q).p;
    return G.order() <= p + 1 && G.order() != p;
}

/// True iff t <= p; `t` must split G over F_q.
inline bool sufficient_by_splitting_degree(u64 q, const AbelianGroup& G, u64 t) {
    const u64 p = PrimePowerQ::from(q).p;
    if (!is_splitting_degree(q, G, t).value())
        fail(ErrorKind::NotASplittingDegree, "F_{q^" + std::to_string(t) + "} does not split " + G.spec());
    return t <= p;
}

inline bool sufficient_by_totient(u64 q, const AbelianGroup& G) {
    require_semisimple(q, G);
    const u64 p = PrimePowerQ::from(q).p;
    return arith::euler_phi(G.exponent()) <= p;
}

/// b^{alpha_g - 1}(b - 1) <= p, i.e. φ(b^{alpha_g}) <= p.
inline bool sufficient_elementary_abelian(u64 q, u64 b, unsigned alpha_g) {
    const u64 p = PrimePowerQ::from(q).p;
    if (alpha_g == 0) fail(ErrorKind::InvalidRequest, "exponent b^alpha needs alpha >= 1");
    const u128 bound = arith::checked_pow(b, alpha_g - 1) * (b - 1);
    return bound <= p;
}

/// Full report; minimal ECD is decided by l <= p with l from one element of
/// maximal order. `t` optionally names a splitting degree to test against p
/// (defaults to l).
inline ClassificationReport is_minimal_ecd(u64 q, const AbelianGroup& G, std::optional<u64> t = std::nullopt) {
    const auto qq = PrimePowerQ::from(q);
    require_semisimple(q, G);
    ClassificationReport r;
    r.p = qq.p;
    r.q = q;
    r.group_spec = G.spec();
    r.canonical_spec = G.canonical_spec();
    r.order = G.order();
    r.exponent = G.exponent();
    r.is_semisimple = true;
    r.witness = max_order_element(G);
    r.witness_t = t_of(q, G, r.witness);
    r.l = r.witness_t;
    r.phi_exp = static_cast<u64>(arith::euler_phi(G.exponent()));
    r.is_ecd_algebra = is_ecd_algebra(q, G);
    r.is_minimal_ecd = r.l <= r.p;

    r.splitting_degree = t.value_or(r.l);
    if (sufficient_by_splitting_degree(q, G, r.splitting_degree))
        r.sufficient_conditions_fired.push_back(SufficientCondition::SplittingDegreeLeP);
    if (sufficient_by_totient(q, G)) r.sufficient_conditions_fired.push_back(SufficientCondition::TotientLeP);
    const auto ep = arith::prime_power_decomposition(G.exponent());
    if (ep.prime != 0 && sufficient_elementary_abelian(q, static_cast<u64>(ep.prime), ep.multiplicity))
        r.sufficient_conditions_fired.push_back(SufficientCondition::ElementaryAbelianBound);

    if (!r.sufficient_conditions_fired.empty() && !r.is_minimal_ecd)
        fail(ErrorKind::PredicateMismatch, "a sufficient condition fired for a non minimal ECD algebra");
    if (r.is_ecd_algebra && !r.is_minimal_ecd)
        fail(ErrorKind::PredicateMismatch, "ECD algebra that is not minimal ECD");
    return r;
}

struct ConstructionRequest {
    u64 p = 0;
    unsigned alpha = 1;
    u64 t = 1;
    u64 max_group_order = 10000;
    std::size_t max_results = 10000;
};

/// Why a constructed algebra is minimal ECD: n | q^t - 1 and t <= p.
struct Certificate {
    u64 n = 0;
    u64 t = 0;
    u64 p = 0;
    u64 q = 0;
    std::string divides = "q^t-1";
    std::string condition = "corollary-splitting-degree";
};

struct ConstructedAlgebra {
    AbelianGroup group;
    Certificate certificate;
    ClassificationReport report;
};

namespace detail {

// Invariant-factor chains d_1 | d_2 | ... | d_{m-1} | n, all d_i >= 2,
// with product at most `cap`. Each chain is emitted ascending, ending in n.
inline void exponent_chains(u64 top, u64 product, u64 cap, std::vector<u64>& suffix,
                            const std::function<void(const std::vector<u64>&)>& emit) {
    std::vector<u64> chain(suffix.rbegin(), suffix.rend());
    emit(chain);
    for (u128 d : arith::divisors(arith::factorize(top))) {
        if (d < 2) continue;
        if (u128{product} * d > cap) break;
        suffix.push_back(static_cast<u64>(d));
        exponent_chains(static_cast<u64>(d), product * static_cast<u64>(d), cap, suffix, emit);
        suffix.pop_back();
    }
}

}  // namespace detail

/// All abelian groups (as invariant-factor chains) of exponent exactly n and
/// order at most `max_order`: C_n first, then the rest lexicographically.
inline std::vector<AbelianGroup> groups_of_exponent(u64 n, u64 max_order, std::size_t limit = ~std::size_t{0}) {
    std::vector<AbelianGroup> out;
    if (n < 2 || n > max_order || limit == 0) return out;
    std::vector<std::vector<u64>> chains;
    std::vector<u64> suffix{n};
    detail::exponent_chains(n, n, max_order, suffix, [&](const std::vector<u64>& c) { chains.push_back(c); });
    std::sort(chains.begin() + 1, chains.end());
    for (auto& c : chains) {
        if (out.size() >= limit) break;
        out.emplace_back(std::move(c));
    }
    return out;
}

/// For each divisor n != 1 of q^t - 1 (ascending) emits groups of exponent n,
/// each certified by n | q^t - 1, t <= p and re-verified by is_minimal_ecd.
inline std::vector<ConstructedAlgebra> construct_minimal_ecd(const ConstructionRequest& req,
                                                             const arith::FactorizeOptions& opts = {}) {
    if (!arith::is_prime(req.p)) fail(ErrorKind::InvalidRequest, std::to_string(req.p) + " is not prime");
    const auto qq = PrimePowerQ::from(req.p, req.alpha);
    if (qq.q == 2) fail(ErrorKind::InvalidRequest, "q = 2 admits no nontrivial divisor of q - 1");
    if (req.t == 0 || req.t > req.p)
        fail(ErrorKind::InvalidRequest, "need 1 <= t <= p, got t = " + std::to_string(req.t));
    const u128 qt = arith::checked_pow(qq.q, static_cast<unsigned>(req.t));
    const auto fact = arith::factorize(qt - 1, opts);

    std::vector<ConstructedAlgebra> out;
    for (u128 n128 : arith::divisors(fact)) {
        if (out.size() >= req.max_results) break;
        if (n128 == 1) continue;
        if (n128 > req.max_group_order) break;
        const u64 n = static_cast<u64>(n128);
        for (auto& G : groups_of_exponent(n, req.max_group_order, req.max_results - out.size())) {
            Certificate cert{n, req.t, req.p, qq.q};
            if (!is_splitting_degree(qq.q, G, req.t).value())
                fail(ErrorKind::PredicateMismatch, "exponent divides q^t - 1 but t is not a splitting degree");
            auto report = is_minimal_ecd(qq.q, G, req.t);
            if (!report.is_minimal_ecd || !report.fired(SufficientCondition::SplittingDegreeLeP))
                fail(ErrorKind::PredicateMismatch, "constructed algebra failed re-verification");
            out.push_back({std::move(G), cert, std::move(report)});
        }
    }
    return out;
}

}  // namespace ecdga
