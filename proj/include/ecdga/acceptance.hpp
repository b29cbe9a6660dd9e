#pragma once

/**
 * @file acceptance.hpp
 * @brief Pinned end-to-end checks, shared by the acceptance test binary and
 *        the `paper-examples` CLI subcommand.
 *
 * Every check is exact. Wherever the library computes a value by a fast
 * route, the check recomputes it by a slow independent one: orbit sizes by
 * walking g -> g^q, ideal dimensions by row reduction, roots of unity by
 * exhausting small fields.
 */

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ecdga/abgroup.hpp"
#include "ecdga/arith.hpp"
#include "ecdga/classify.hpp"
#include "ecdga/ffield.hpp"
#include "ecdga/galgebra.hpp"
#include "ecdga/orbits.hpp"

namespace ecdga::acceptance {

struct CorpusEntry {
    u64 q;
    std::vector<u64> factors;
};

/// Semisimple (q, G) pairs with |G| <= 200.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> pairs = {
        {2, {3}}, {2, {5}}, {2, {7}}, {2, {9}}, {2, {15}}, {2, {21}}, {2, {3, 3}}, {2, {31}}, {2, {3, 3, 3}},
        {2, {5, 5}}, {2, {17}}, {2, {51}}, {2, {63}}, {2, {73}}, {2, {3, 9}}, {2, {127}}, {2, {11}}, {2, {199}},
        {3, {2}}, {3, {4}}, {3, {8}}, {3, {2, 2}}, {3, {2, 4}}, {3, {5}}, {3, {7}}, {3, {10}}, {3, {11}}, {3, {13}},
        {3, {16}}, {3, {20}}, {3, {2, 2, 2}}, {3, {4, 4}}, {3, {40}}, {3, {121}}, {3, {2, 26}}, {3, {200}},
        {4, {3}}, {4, {5}}, {4, {7}}, {4, {9}}, {4, {15}}, {4, {3, 3}}, {4, {21}}, {4, {45}}, {4, {17}},
        {4, {3, 5, 5}},
        {5, {2}}, {5, {3}}, {5, {4}}, {5, {6}}, {5, {7}}, {5, {8}}, {5, {12}}, {5, {2, 2}}, {5, {4, 4}}, {5, {11}},
        {5, {13}}, {5, {24}}, {5, {3, 3}}, {5, {31}}, {5, {2, 12}}, {5, {2, 4, 8}}, {5, {2, 2, 2, 2, 2, 2}},
        {7, {3}}, {7, {8}}, {7, {9}}, {7, {19}}, {7, {2, 4}}, {7, {6, 6}}, {7, {57}}, {7, {2, 3, 5}}, {7, {10, 10}},
        {8, {7}}, {8, {9}}, {8, {3, 3}}, {8, {73}},
        {9, {4}}, {9, {5}}, {9, {8}}, {9, {10}}, {9, {11}}, {9, {16}}, {9, {2, 4}}, {9, {2, 2, 2, 2}},
        {11, {5}}, {11, {10}}, {11, {12}}, {11, {3, 3}}, {11, {7}}, {11, {2, 2, 3}},
        {13, {3}}, {13, {7}}, {13, {14}}, {13, {12}}, {13, {4, 3}}, {13, {2, 2, 2, 7}},
        {16, {3}}, {16, {5}}, {16, {15}}, {16, {17}}, {16, {51}}, {16, {3, 5}},
        {25, {11, 11}}, {25, {3}}, {25, {13}}, {25, {24}}, {25, {2, 2, 3}}, {25, {4, 4}},
        {27, {13}}, {27, {2, 13}}, {27, {7}},
        {49, {5}}, {49, {8, 8}}, {49, {3, 4}},
        {17, {2, 8}}, {17, {3, 3}}, {19, {9}}, {19, {4, 5}}, {23, {11}}, {23, {3, 4}}, {29, {7}}, {31, {2, 3, 5}},
        {37, {12}}, {41, {8}}, {43, {7}},
    };
    return pairs;
}

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

/// Accumulates failures; the first few are kept for the report.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failures_;
            if (messages_.size() < 5) messages_.push_back(what);
        }
    }

    bool ok() const { return failures_ == 0; }
    u64 checks() const { return checks_; }

    std::string summary(const std::string& extra = {}) const {
        std::ostringstream os;
        os << checks_ << " checks";
        if (!extra.empty()) os << ", " << extra;
        if (failures_) {
            os << ", " << failures_ << " failed:";
            for (const auto& m : messages_) os << " [" << m << "]";
        }
        return os.str();
    }

private:
    u64 checks_ = 0;
    u64 failures_ = 0;
    std::vector<std::string> messages_;
};

inline std::string label(u64 q, const AbelianGroup& G) { return "q=" + std::to_string(q) + " G=" + G.spec(); }

/// Everything criteria 5, 6 and 9 need about one algebra, computed once.
struct AlgebraAudit {
    u64 q = 0;
    u64 p = 0;
    AbelianGroup group;
    std::shared_ptr<GroupAlgebra> algebra;
    std::vector<MinimalIdealReport> ideals;
    std::vector<u64> oracle_dims;  // per ideal, recomputed here
    std::string error;
};

inline std::map<std::pair<u64, std::vector<u64>>, AlgebraAudit>& audit_cache() {
    static std::map<std::pair<u64, std::vector<u64>>, AlgebraAudit> cache;
    return cache;
}

inline const AlgebraAudit& audit(const CorpusEntry& e) {
    auto& cache = audit_cache();
    auto key = std::make_pair(e.q, e.factors);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    AlgebraAudit a{e.q, PrimePowerQ::from(e.q).p, AbelianGroup(e.factors), nullptr, {}, {}, {}};
    try {
        a.algebra = std::make_shared<GroupAlgebra>(e.q, a.group);
        a.ideals = primitive_idempotents(*a.algebra);
        for (const auto& r : a.ideals) a.oracle_dims.push_back(ideal_dimension_oracle(r.idempotent));
    } catch (const Error& err) {
        a.error = std::string(to_string(err.kind())) + ": " + err.what();
    }
    return cache.emplace(key, std::move(a)).first->second;
}

/// t_g by walking g -> g^q until it returns; independent of mul_order.
inline u64 t_by_walk(u64 q, const AbelianGroup& G, const GroupElement& g) {
    u64 t = 0;
    GroupElement h = g;
    do {
        h = G.power(h, q);
        ++t;
    } while (h != g);
    return t;
}

/// Exhaustive: does the multiplicative group of `ext` contain an element of order exactly n?
inline bool has_element_of_order(const ExtensionField& ext, u64 n) {
    const auto primes = arith::factorize(n).primes();
    const u64 size = static_cast<u64>(ext.size());
    const u64 q = static_cast<u64>(ext.base().size());
    for (u64 code = 1; code < size; ++code) {
        ExtensionField::Elem x(ext.degree());
        u64 c = code;
        for (auto& d : x) {
            d = c % q;
            c /= q;
        }
        if (!(ext.pow(x, n) == ext.one())) continue;
        bool exact = true;
        for (u128 s : primes)
            if (ext.pow(x, static_cast<u64>(n / s)) == ext.one()) exact = false;
        if (exact) return true;
    }
    return false;
}

}  // namespace detail

// 1. q = 13, G = C_2669.
inline CriterionResult criterion_c2669() {
    detail::Checker ck;
    const AbelianGroup G({2669});
    const u64 q = 13;
    ck.expect(arith::factorize(2669).to_string() == "17 * 157", "2669 = 17 * 157");
    const GroupElement g{{157}}, h{{17}}, gh = G.multiply(g, h);
    ck.expect(element_order(G, g) == 17 && element_order(G, h) == 157 && element_order(G, gh) == 2669,
              "element orders 17, 157, 2669");
    ck.expect(t_of(q, G, g) == 4, "t(order 17) = 4");
    ck.expect(t_of(q, G, h) == 6, "t(order 157) = 6");
    ck.expect(t_of(q, G, gh) == 12, "t(order 2669) = 12");
    ck.expect(detail::t_by_walk(q, G, g) == 4 && detail::t_by_walk(q, G, h) == 6 &&
                  detail::t_by_walk(q, G, gh) == 12,
              "orbit walks agree");
    ck.expect(arith::mul_order_by_scan(13, 17) == 4 && arith::mul_order_by_scan(13, 157) == 6 &&
                  arith::mul_order_by_scan(13, 2669) == 12,
              "linear-scan orders agree");
    ck.expect(t_of(q, G, gh) == arith::lcm(t_of(q, G, g), t_of(q, G, h)), "t(gh) = lcm(t(g), t(h))");
    ck.expect(global_l(q, G) == 12, "l = 12");
    ck.expect(orbit_partition(q, G).l == 12, "lcm of all orbit sizes = 12");
    ck.expect(minimal_splitting_degree(q, G) == 12, "minimal splitting degree 12");
    return {1, "q=13, G=C_2669: t = 4, 6, 12 and l = 12", ck.ok(), ck.summary()};
}

// 2. q = 25, G = C_176.
inline CriterionResult criterion_c176() {
    detail::Checker ck;
    const AbelianGroup G({176});
    const u64 q = 25;
    const GroupElement g{{11}}, h{{16}}, gh = G.multiply(g, h);
    ck.expect(element_order(G, g) == 16 && element_order(G, h) == 11 && element_order(G, gh) == 176,
              "element orders 16, 11, 176");
    ck.expect(t_of(q, G, g) == 2, "t(order 16) = 2");
    ck.expect(t_of(q, G, h) == 5, "t(order 11) = 5");
    ck.expect(t_of(q, G, gh) == 10, "t(order 176) = 10");
    ck.expect(t_of(q, G, gh) == t_of(q, G, g) * t_of(q, G, h), "t(gh) = t(g) t(h)");
    ck.expect(detail::t_by_walk(q, G, gh) == 10, "orbit walk gives 10");
    ck.expect(global_l(q, G) == 10 && orbit_partition(q, G).l == 10, "l = 10");
    ck.expect(minimal_splitting_degree(q, G) == 10, "minimal splitting degree 10");
    ck.expect(!is_splitting_degree(q, G, 3).value() && is_splitting_degree(q, G, 10).value(),
              "t = 3 does not split, t = 10 does");
    FieldTower F(5, 2, 10);
    auto theta = primitive_root_of_unity(F, 176);
    ck.expect(F.ext().pow(theta, u64{176}) == F.ext().one() && !(F.ext().pow(theta, u64{88}) == F.ext().one()) &&
                  !(F.ext().pow(theta, u64{16}) == F.ext().one()),
              "F_{25^10} holds a primitive 176-th root");
    return {2, "q=25, G=C_176: t = 2, 5, 10 and l = 10", ck.ok(), ck.summary()};
}

// 3. q = 5^6, exponent-144 groups.
inline CriterionResult criterion_exponent_144() {
    detail::Checker ck;
    const u64 q = 15625;
    const u128 n = arith::checked_pow(5, 24) - 1;
    const auto f = arith::factorize(n);
    const std::vector<arith::PrimePower> expected = {{2, 5}, {3, 2}, {7, 1}, {13, 1},
                                                     {31, 1}, {313, 1}, {601, 1}, {390001, 1}};
    ck.expect(f.factors == expected, "5^24 - 1 = " + f.to_string());
    ck.expect(f.recompose() == n, "factorization recomposes");
    const AbelianGroup G1({2, 16, 9, 3}), G2({8, 8, 16, 9});
    std::string extra;
    for (const auto* G : {&G1, &G2}) {
        ck.expect(G->exponent() == 144, G->spec() + " has exponent 144");
        auto ev = is_splitting_degree(q, *G, 4);
        ck.expect(ev.value() && ev.exponent_divides_q_pow_t_minus_1 && ev.l_divides_t, G->spec() + ": t = 4 splits");
        ck.expect(sufficient_by_splitting_degree(q, *G, 4), G->spec() + ": 4 <= p");
        auto rep = is_minimal_ecd(q, *G, 4);
        ck.expect(rep.is_minimal_ecd, G->spec() + " is minimal ECD");
        ck.expect(rep.fired(SufficientCondition::SplittingDegreeLeP), G->spec() + ": splitting-degree certificate");
        ck.expect(!rep.is_ecd_algebra, G->spec() + " is not an ECD algebra");
        extra += G->spec() + " l=" + std::to_string(rep.l) + "; ";
    }
    // The construction must reach both isomorphism classes.
    ConstructionRequest req{5, 6, 4, 10000, 1000000};
    auto built = construct_minimal_ecd(req);
    bool has1 = false, has2 = false;
    for (const auto& c : built) {
        has1 = has1 || c.group.isomorphic_to(G1);
        has2 = has2 || c.group.isomorphic_to(G2);
        if (!c.report.is_minimal_ecd || c.group.exponent() != c.certificate.n) {
            ck.expect(false, "constructed " + c.group.spec() + " fails its certificate");
            break;
        }
    }
    ck.expect(has1, "construction contains C2xC16xC9xC3");
    ck.expect(has2, "construction contains C8xC8xC16xC9");
    extra += std::to_string(built.size()) + " groups constructed with order <= 10000";
    return {3, "q=5^6: factorization of q^4 - 1, exponent-144 groups minimal ECD", ck.ok(), ck.summary(extra)};
}

// 4. q = 25, elementary abelian 11-groups.
inline CriterionResult criterion_elementary_11() {
    detail::Checker ck;
    const u64 q = 25;
    ck.expect(arith::powmod(25, 2, 11) == 9 && arith::powmod(25, 5, 11) == 1, "25^2 = 9, 25^5 = 1 mod 11");
    for (const auto& ds : {std::vector<u64>{11, 11}, std::vector<u64>{11, 11, 11}}) {
        const AbelianGroup G(ds);
        bool all5 = true;
        for (const auto& g : enumerate_elements(G)) {
            if (g == G.identity()) continue;
            if (t_of(q, G, g) != 5 || detail::t_by_walk(q, G, g) != 5) all5 = false;
        }
        ck.expect(all5, G.spec() + ": every non-identity t_g = 5");
        auto part = orbit_partition(q, G);
        ck.expect(part.sizes().front() == 1 && part.histogram().at(5) == (G.order() - 1) / 5,
                  G.spec() + ": one fixed point, rest in orbits of size 5");
        auto rep = is_minimal_ecd(q, G);
        ck.expect(rep.is_minimal_ecd && rep.l == 5, G.spec() + " is minimal ECD with l = 5");
        ck.expect(!sufficient_by_totient(q, G) && rep.phi_exp == 10, G.spec() + ": φ(11) = 10 > 5");
        ck.expect(!rep.fired(SufficientCondition::TotientLeP), G.spec() + ": totient condition silent");
        ck.expect(!sufficient_elementary_abelian(q, 11, 1), "11^0 * 10 > 5");
    }
    return {4, "q=25, G=C_11^2 and C_11^3: minimal ECD although φ(11) > p", ck.ok(), ck.summary()};
}

// 5. Orbit sizes = primitive-idempotent dimensions; orthogonal decomposition of 1.
inline CriterionResult criterion_orbit_ideal_equivalence() {
    detail::Checker ck;
    u64 ideals = 0;
    for (const auto& e : corpus()) {
        const auto& a = detail::audit(e);
        const std::string tag = detail::label(e.q, a.group);
        ck.expect(a.error.empty(), tag + ": " + a.error);
        if (!a.error.empty()) continue;
        std::vector<u64> dims = a.oracle_dims;
        std::sort(dims.begin(), dims.end());
        ck.expect(dims == orbit_partition(e.q, a.group).sizes(), tag + ": oracle dimensions = orbit sizes");
        u64 total = 0;
        for (u64 d : dims) total += d;
        ck.expect(total == a.group.order(), tag + ": dimensions sum to |G|");
        auto sum = a.algebra->zero();
        for (std::size_t i = 0; i < a.ideals.size(); ++i) {
            const auto& ei = a.ideals[i].idempotent;
            ck.expect(is_idempotent(ei), tag + ": idempotent");
            ck.expect(a.ideals[i].dimension == a.oracle_dims[i], tag + ": reported dimension = oracle");
            sum = add(sum, ei);
            for (std::size_t j = i + 1; j < a.ideals.size(); ++j)
                ck.expect(multiply(ei, a.ideals[j].idempotent) == a.algebra->zero(), tag + ": orthogonal");
        }
        ck.expect(sum == a.algebra->one(), tag + ": idempotents sum to 1");
        ideals += a.ideals.size();
    }
    ck.expect(corpus().size() >= 50, "corpus has at least 50 pairs");
    return {5, "orbit sizes = minimal-ideal dimensions", ck.ok(),
            ck.summary(std::to_string(corpus().size()) + " pairs, " + std::to_string(ideals) + " minimal ideals")};
}

// 6. The λ₁ shortcut matches the rank oracle for ideals of dimension <= p.
inline CriterionResult criterion_ecd_shortcut() {
    detail::Checker ck;
    u64 minimal = 0, sums = 0;
    for (const auto& e : corpus()) {
        const auto& a = detail::audit(e);
        if (!a.error.empty()) {
            ck.expect(false, detail::label(e.q, a.group) + ": " + a.error);
            continue;
        }
        const std::string tag = detail::label(e.q, a.group);
        for (std::size_t i = 0; i < a.ideals.size(); ++i) {
            if (a.oracle_dims[i] > a.p) continue;
            ck.expect(ecd_dimension(a.ideals[i].idempotent) == a.oracle_dims[i], tag + ": shortcut on minimal ideal");
            ++minimal;
        }
        // Non-minimal idempotents: greedy prefix sums and pairs with total dimension <= p.
        auto acc = a.algebra->zero();
        u64 acc_dim = 0;
        for (std::size_t i = 0; i < a.ideals.size(); ++i) {
            if (acc_dim + a.oracle_dims[i] > a.p) continue;
            acc = add(acc, a.ideals[i].idempotent);
            acc_dim += a.oracle_dims[i];
            if (acc_dim < 2 && i == 0) continue;
            const u64 oracle = ideal_dimension_oracle(acc);
            ck.expect(oracle == acc_dim, tag + ": direct sum dimension");
            ck.expect(ecd_dimension(acc) == oracle, tag + ": shortcut on sum of minimal ideals");
            ++sums;
        }
        const std::size_t m = std::min<std::size_t>(a.ideals.size(), 6);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                if (a.oracle_dims[i] + a.oracle_dims[j] > a.p) continue;
                auto s = add(a.ideals[i].idempotent, a.ideals[j].idempotent);
                const u64 oracle = ideal_dimension_oracle(s);
                ck.expect(ecd_dimension(s) == oracle, tag + ": shortcut on pair sum");
                ++sums;
            }
        }
    }
    return {6, "ECD dimension shortcut = rank oracle when dim <= p", ck.ok(),
            ck.summary(std::to_string(minimal) + " minimal ideals, " + std::to_string(sums) + " sums")};
}

// 7. l | t  <=>  exp(G) | q^t - 1  <=>  F_{q^t} has a primitive exp(G)-th root.
inline CriterionResult criterion_splitting_equivalence() {
    detail::Checker ck;
    constexpr u64 kExhaustiveFieldLimit = 1024;
    std::map<u64, std::shared_ptr<const BaseField>> bases;
    std::map<std::pair<u64, u64>, std::shared_ptr<const FieldTower>> towers;
    u64 roots = 0, exhaustive = 0;
    for (const auto& e : corpus()) {
        const AbelianGroup G(e.factors);
        const auto qq = PrimePowerQ::from(e.q);
        const u64 E = G.exponent();
        const u64 l_walk = orbit_partition(e.q, G).l;
        auto& base = bases[e.q];
        if (!base) base = std::make_shared<const BaseField>(qq.p, qq.alpha);
        for (u64 t = 1; t <= 30; ++t) {
            const std::string tag = detail::label(e.q, G) + " t=" + std::to_string(t);
            const bool l_div = t % l_walk == 0;
            const bool exp_div = arith::powmod(e.q, t, E) == 1 % E;
            ck.expect(l_div == exp_div, tag + ": l | t vs exp(G) | q^t - 1");
            bool lib_value = false;
            try {
                lib_value = is_splitting_degree(e.q, G, t).value();
            } catch (const Error& err) {
                ck.expect(false, tag + ": " + err.what());
            }
            ck.expect(lib_value == l_div, tag + ": is_splitting_degree");

            auto& tower = towers[{e.q, t}];
            if (!tower) tower = std::make_shared<const FieldTower>(base, static_cast<unsigned>(t));
            const auto& ext = tower->ext();
            bool found = false;
            try {
                auto theta = primitive_root_of_unity(*tower, E);
                found = true;
                bool exact = ext.pow(theta, E) == ext.one();
                for (u128 s : arith::factorize(E).primes())
                    exact = exact && !(ext.pow(theta, static_cast<u64>(E / s)) == ext.one());
                ck.expect(exact, tag + ": root has order exactly exp(G)");
                ++roots;
            } catch (const Error& err) {
                ck.expect(err.kind() == ErrorKind::NoSuchRoot, tag + ": unexpected " + err.what());
            }
            ck.expect(found == l_div, tag + ": root exists iff l | t");
            if (ext.size() <= kExhaustiveFieldLimit) {
                ck.expect(detail::has_element_of_order(ext, E) == l_div, tag + ": exhaustive root search");
                ++exhaustive;
            }
        }
    }
    return {7, "l | t <=> exp(G) | q^t - 1 <=> primitive root exists (t = 1..30)", ck.ok(),
            ck.summary(std::to_string(towers.size()) + " fields built, " + std::to_string(roots) + " roots, " +
                       std::to_string(exhaustive) + " exhaustive confirmations")};
}

namespace detail {

inline void orbit_properties(u64 q, const AbelianGroup& G, Checker& ck) {
    const std::string tag = label(q, G);
    const u64 n = G.order();
    std::vector<GroupElement> elems;
    elems.reserve(n);
    for (const auto& g : enumerate_elements(G)) elems.push_back(g);
    std::vector<u64> t(n), o(n);
    for (u64 r = 0; r < n; ++r) {
        t[r] = t_of(q, G, elems[r]);
        o[r] = element_order(G, elems[r]);
    }
    const u64 l = global_l(q, G);

    // g^{q^a} = g  <=>  t_g | a, for a <= 3 t_g.
    bool part1 = true;
    for (u64 r = 0; r < n; ++r) {
        GroupElement h = elems[r];
        for (u64 a = 1; a <= 3 * t[r]; ++a) {
            h = G.power(h, q);
            if ((h == elems[r]) != (a % t[r] == 0)) part1 = false;
        }
    }
    ck.expect(part1, tag + ": g^{q^a} = g <=> t_g | a");

    // every g fixed by q^a  <=>  l | a.
    bool part2 = true;
    std::vector<GroupElement> cur = elems;
    for (u64 a = 1; a <= 3 * l; ++a) {
        bool all_fixed = true;
        for (u64 r = 0; r < n; ++r) {
            cur[r] = G.power(cur[r], q);
            if (cur[r] != elems[r]) all_fixed = false;
        }
        if (all_fixed != (a % l == 0)) part2 = false;
    }
    ck.expect(part2, tag + ": every g fixed by q^a <=> l | a");

    // t_{gh} | lcm(t_g, t_h) with equality for coprime orders; o(g) | o(h) => t_g | t_h.
    bool part3 = true, part3_eq = true, cor = true, part4 = true;
    for (u64 i = 0; i < n; ++i) {
        for (u64 j = 0; j < n; ++j) {
            const u64 k = G.rank(G.multiply(elems[i], elems[j]));
            const u64 L = static_cast<u64>(arith::lcm(t[i], t[j]));
            if (L % t[k] != 0) part3 = false;
            if (std::gcd(o[i], o[j]) == 1) {
                if (t[k] != L) part3_eq = false;
                if (std::gcd(t[i], t[j]) == 1 && t[k] != t[i] * t[j]) cor = false;
            }
            if (n <= 500 && o[j] % o[i] == 0 && t[j] % t[i] != 0) part4 = false;
        }
    }
    ck.expect(part3, tag + ": t_{gh} | lcm(t_g, t_h)");
    ck.expect(part3_eq, tag + ": t_{gh} = lcm(t_g, t_h) for coprime orders");
    ck.expect(cor, tag + ": t_{gh} = t_g t_h for coprime orders and coprime t");
    ck.expect(part4, tag + ": o(g) | o(h) => t_g | t_h");

    // l is attained at an element of maximal order, and equals the lcm of all orbit sizes.
    u64 lcm_all = 1;
    for (u64 r = 0; r < n; ++r) lcm_all = static_cast<u64>(arith::lcm(lcm_all, t[r]));
    const auto part = orbit_partition(q, G);
    ck.expect(l == lcm_all && l == part.l, tag + ": l = t_w = lcm of orbit sizes");
    ck.expect(element_order(G, max_order_element(G)) == G.exponent(), tag + ": o(w) = exp(G)");

    // Orbits sit inside cyclic classes, so t_g <= φ(o(g)).
    bool inside = true;
    for (const auto& orbit : part.orbits) {
        const GroupElement& g = orbit.representative;
        if (orbit.size != t[G.rank(g)] || orbit.size > arith::euler_phi(orbit.element_order)) inside = false;
        if (n <= 1000) {
            const auto cls = cyclic_class(G, g);
            for (u64 m : orbit.member_ranks)
                if (!std::binary_search(cls.begin(), cls.end(), elems[m], [&G](const auto& a, const auto& b) {
                        return G.rank(a) < G.rank(b);
                    }))
                    inside = false;
        }
    }
    ck.expect(inside, tag + ": S_g ⊆ C_g and |S_g| = t_g <= φ(o(g))");
}

}  // namespace detail

// 8. Orbit-size properties by exhaustion.
inline CriterionResult criterion_orbit_properties() {
    detail::Checker ck;
    u64 groups = 0;
    for (const auto& e : corpus()) {
        detail::orbit_properties(e.q, AbelianGroup(e.factors), ck);
        ++groups;
    }
    detail::orbit_properties(25, AbelianGroup({176}), ck);
    detail::orbit_properties(15625, AbelianGroup({2, 16, 9, 3}), ck);
    groups += 2;
    return {8, "orbit-size properties and l = t_w by exhaustion", ck.ok(),
            ck.summary(std::to_string(groups) + " groups")};
}

// 9. Minimal ECD <=> every minimal ideal has dimension <= p.
inline CriterionResult criterion_minimal_ecd_characterization() {
    detail::Checker ck;
    u64 yes = 0, no = 0;
    for (const auto& e : corpus()) {
        const auto& a = detail::audit(e);
        const std::string tag = detail::label(e.q, a.group);
        if (!a.error.empty()) {
            ck.expect(false, tag + ": " + a.error);
            continue;
        }
        const bool by_ideals = std::all_of(a.oracle_dims.begin(), a.oracle_dims.end(), [&](u64 d) { return d <= a.p; });
        const auto rep = is_minimal_ecd(e.q, a.group);
        ck.expect(rep.is_minimal_ecd == by_ideals, tag + ": l <= p agrees with ideal dimensions");
        if (rep.is_ecd_algebra) ck.expect(by_ideals, tag + ": ECD algebra has all minimal ideals ECD");
        for (auto c : rep.sufficient_conditions_fired)
            ck.expect(by_ideals, tag + ": " + std::string(to_string(c)) + " is sound");
        (by_ideals ? yes : no)++;
    }
    ck.expect(yes > 0 && no > 0, "corpus exercises both directions");
    return {9, "minimal ECD <=> l <= p, against the rank oracle", ck.ok(),
            ck.summary(std::to_string(yes) + " minimal ECD, " + std::to_string(no) + " not")};
}

struct Criterion {
    int id;
    std::function<CriterionResult()> run;
};

inline const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, criterion_c2669},
        {2, criterion_c176},
        {3, criterion_exponent_144},
        {4, criterion_elementary_11},
        {5, criterion_orbit_ideal_equivalence},
        {6, criterion_ecd_shortcut},
        {7, criterion_splitting_equivalence},
        {8, criterion_orbit_properties},
        {9, criterion_minimal_ecd_characterization},
    };
    return all;
}

/// Runs one criterion, timing it and turning any escaped exception into a failure.
inline CriterionResult run(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = c.run();
    } catch (const std::exception& ex) {
        r = {c.id, "criterion " + std::to_string(c.id), false, std::string("exception: ") + ex.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs every criterion, or only `only` when given.
inline std::vector<CriterionResult> run_all(std::optional<int> only = std::nullopt) {
    std::vector<CriterionResult> out;
    for (const auto& c : criteria())
        if (!only || *only == c.id) out.push_back(run(c));
    return out;
}

}  // namespace ecdga::acceptance
