#pragma once

/**
 * @file orbits.hpp
 * @brief q-orbits (q-cyclotomic classes) of a finite abelian group.
 *
 * The Frobenius x -> x^q acts on G by g -> g^q whenever p does not divide |G|.
 * The orbit S_g of g has size t_g, the multiplicative order of q modulo o(g),
 * and l = lcm{t_g} is attained at any element of maximal order. That last
 * fact lets global_l() touch a single element instead of walking G.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ecdga/abgroup.hpp"
#include "ecdga/arith.hpp"
#include "ecdga/error.hpp"

namespace ecdga {

/// A prime power q = p^alpha.
struct PrimePowerQ {
    u64 q;
    u64 p;
    unsigned alpha;

    static PrimePowerQ from(u64 q) {
        auto pp = arith::prime_power_decomposition(q);
        if (pp.prime == 0) fail(ErrorKind::InvalidField, std::to_string(q) + " is not a prime power");
        return {q, static_cast<u64>(pp.prime), pp.multiplicity};
    }

    static PrimePowerQ from(u64 p, unsigned alpha) {
        if (!arith::is_prime(p)) fail(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
        if (alpha == 0) fail(ErrorKind::InvalidField, "alpha must be positive");
        u128 q = arith::checked_pow(p, alpha);
        if ((q >> 63) != 0) fail(ErrorKind::Overflow, "q exceeds 63 bits");
        return {static_cast<u64>(q), p, alpha};
    }
};

inline bool is_semisimple(u64 q, const AbelianGroup& G) { return std::gcd(q, G.order()) == 1; }

inline void require_semisimple(u64 q, const AbelianGroup& G) {
    if (!is_semisimple(q, G))
        fail(ErrorKind::NotSemisimple, "characteristic of F_" + std::to_string(q) + " divides |G| = " +
                                           std::to_string(G.order()));
}

/// t_g: least a >= 1 with q^a = 1 mod o(g); 1 for the identity.
inline u64 t_of(u64 q, const AbelianGroup& G, const GroupElement& g) {
    require_semisimple(q, G);
    u64 o = element_order(G, g);
    if (o == 1) return 1;
    return static_cast<u64>(arith::mul_order(q % o, o));
}

/// An orbit {g^{q^j}}. Members are listed by rank starting at the
/// representative and following successive q-th powers.
struct QOrbit {
    GroupElement representative;
    std::vector<u64> member_ranks;
    u64 size = 0;
    u64 element_order = 1;
};

struct OrbitPartition {
    u64 q = 0;
    AbelianGroup group;
    std::vector<QOrbit> orbits;
    u64 l = 1;

    /// Orbit sizes, ascending.
    std::vector<u64> sizes() const {
        std::vector<u64> s;
        s.reserve(orbits.size());
        for (const auto& o : orbits) s.push_back(o.size);
        std::sort(s.begin(), s.end());
        return s;
    }

    /// size -> number of orbits of that size
    std::map<u64, u64> histogram() const {
        std::map<u64, u64> h;
        for (const auto& o : orbits) ++h[o.size];
        return h;
    }
};

/// Walks g, g^q, g^{q^2}, ... and cross-checks the count against t_of.
inline QOrbit q_orbit(u64 q, const AbelianGroup& G, const GroupElement& g) {
    u64 t = t_of(q, G, g);
    QOrbit orbit;
    orbit.representative = g;
    orbit.element_order = element_order(G, g);
    GroupElement h = g;
    do {
        orbit.member_ranks.push_back(G.rank(h));
        h = G.power(h, q);
    } while (h != g);
    orbit.size = orbit.member_ranks.size();
    if (orbit.size != t)
        fail(ErrorKind::PredicateMismatch, "orbit walk found " + std::to_string(orbit.size) +
                                               " members but t_g = " + std::to_string(t));
    return orbit;
}

/// Every element in exactly one orbit. Representatives are the least-rank
/// member; orbits are sorted by (size, representative rank).
inline OrbitPartition orbit_partition(u64 q, const AbelianGroup& G, u64 cap = kDefaultEnumerationCap) {
    require_semisimple(q, G);
    check_enumerable(G, cap);
    OrbitPartition part{q, G, {}, 1};
    const u64 n = G.order();
    std::vector<bool> visited(n, false);
    for (u64 r = 0; r < n; ++r) {
        if (visited[r]) continue;
        GroupElement g = G.element_at(r);
        QOrbit orbit;
        orbit.representative = g;
        orbit.element_order = element_order(G, g);
        GroupElement h = g;
        do {
            u64 hr = G.rank(h);
            visited[hr] = true;
            orbit.member_ranks.push_back(hr);
            h = G.power(h, q);
        } while (h != g);
        orbit.size = orbit.member_ranks.size();
        part.l = static_cast<u64>(arith::lcm(part.l, orbit.size));
        part.orbits.push_back(std::move(orbit));
    }
    std::stable_sort(part.orbits.begin(), part.orbits.end(),
                     [](const QOrbit& a, const QOrbit& b) { return a.size < b.size; });
    return part;
}

/// l = t_w for any w of order exp(G); never enumerates G.
inline u64 global_l(u64 q, const AbelianGroup& G) { return t_of(q, G, max_order_element(G)); }

/// The two integer characterizations of "F_{q^t} splits G", evaluated independently.
struct SplittingEvidence {
    u64 t = 0;
    u64 l = 0;
    u64 exponent = 0;
    u64 q_pow_t_mod_exponent = 0;
    bool l_divides_t = false;
    bool exponent_divides_q_pow_t_minus_1 = false;

    bool value() const { return l_divides_t; }
};

inline SplittingEvidence is_splitting_degree(u64 q, const AbelianGroup& G, u64 t) {
    if (t == 0) fail(ErrorKind::InvalidRequest, "splitting degree must be positive");
    SplittingEvidence ev;
    ev.t = t;
    ev.l = global_l(q, G);
    ev.exponent = G.exponent();
    ev.q_pow_t_mod_exponent = static_cast<u64>(arith::powmod(q, t, ev.exponent));
    ev.l_divides_t = t % ev.l == 0;
    ev.exponent_divides_q_pow_t_minus_1 = ev.q_pow_t_mod_exponent == 1 % ev.exponent;
    if (ev.l_divides_t != ev.exponent_divides_q_pow_t_minus_1)
        fail(ErrorKind::PredicateMismatch, "l | t and exp(G) | q^t - 1 disagree for t = " + std::to_string(t));
    return ev;
}

/// Degree [F : F_q] of the smallest extension of F_q that splits G.
inline u64 minimal_splitting_degree(u64 q, const AbelianGroup& G) { return global_l(q, G); }

}  // namespace ecdga
