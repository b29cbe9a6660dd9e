#pragma once

// Brute-force reference implementations. Deliberately naive: each one
// recomputes a library value from its definition, never via the library's
// own shortcuts.

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ecdga/abgroup.hpp"

namespace oracle {

using ecdga::u64;

inline u64 phi(u64 n) {
    u64 c = 0;
    for (u64 k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Least m >= 1 with a^m = 1 mod n, by repeated multiplication.
inline u64 order_mod(u64 a, u64 n) {
    if (n == 1) return 1;
    u64 x = a % n, m = 1;
    while (x != 1) {
        x = static_cast<u64>((static_cast<unsigned __int128>(x) * a) % n);
        ++m;
    }
    return m;
}

/// Order of g by multiplying g with itself until the identity appears.
inline u64 element_order(const ecdga::AbelianGroup& G, const ecdga::GroupElement& g) {
    ecdga::GroupElement h = g;
    u64 m = 1;
    while (h != G.identity()) {
        h = G.multiply(h, g);
        ++m;
    }
    return m;
}

/// Orbit of g under g -> g^q, as a set of ranks.
inline std::set<u64> orbit(u64 q, const ecdga::AbelianGroup& G, const ecdga::GroupElement& g) {
    std::set<u64> s;
    ecdga::GroupElement h = g;
    do {
        s.insert(G.rank(h));
        h = G.power(h, q);
    } while (h != g);
    return s;
}

/// Multiset of orbit sizes, ascending, by walking every element.
inline std::vector<u64> orbit_sizes(u64 q, const ecdga::AbelianGroup& G) {
    std::vector<bool> seen(G.order(), false);
    std::vector<u64> sizes;
    for (u64 r = 0; r < G.order(); ++r) {
        if (seen[r]) continue;
        auto s = orbit(q, G, G.element_at(r));
        for (u64 m : s) seen[m] = true;
        sizes.push_back(s.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

/// Random factor list with every factor in [2, max_factor] and order <= max_order.
inline std::vector<u64> random_factors(std::mt19937_64& eng, u64 max_factor, u64 max_order, std::size_t max_len = 4) {
    std::uniform_int_distribution<u64> pick(2, max_factor);
    std::vector<u64> ds{pick(eng)};
    u64 order = ds[0];
    while (ds.size() < max_len && eng() % 2 == 0) {
        const u64 d = pick(eng);
        if (order * d > max_order) break;
        ds.push_back(d);
        order *= d;
    }
    return ds;
}

}  // namespace oracle
