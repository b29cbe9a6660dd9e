#pragma once

/**
 * @file abgroup.hpp
 * @brief Finite abelian groups C_{d1} x ... x C_{dk} in multiplicative notation.
 *
 * Elements are exponent vectors. The group keeps the presentation it was
 * given (e.g. C2 x C16 x C9 x C3) next to its invariant-factor chain
 * d'_1 | d'_2 | ... | d'_m. Elements are ranked in mixed radix with the
 * first factor most significant, so rank order is lexicographic order and
 * the identity has rank 0.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "ecdga/arith.hpp"
#include "ecdga/error.hpp"

namespace ecdga {

inline constexpr u64 kDefaultEnumerationCap = 10000000;

struct GroupElement {
    std::vector<u64> exponents;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<u64> factor_orders) : factors_(std::move(factor_orders)) {
        if (factors_.empty()) fail(ErrorKind::InvalidGroup, "group needs at least one cyclic factor");
        order_ = 1;
        exponent_ = 1;
        for (u64 d : factors_) {
            if (d < 2) fail(ErrorKind::InvalidGroup, "cyclic factor orders must be >= 2");
            order_ = arith::checked_mul(order_, d);
            exponent_ = arith::lcm(exponent_, d);
        }
        if ((order_ >> 64) != 0) fail(ErrorKind::Overflow, "group order exceeds 64 bits");
        invariant_factors_ = compute_invariant_factors(factors_);
    }

    const std::vector<u64>& factor_orders() const { return factors_; }
    const std::vector<u64>& invariant_factors() const { return invariant_factors_; }
    std::size_t rank_count() const { return factors_.size(); }
    u64 order() const { return static_cast<u64>(order_); }
    u64 exponent() const { return static_cast<u64>(exponent_); }

    /// "C2xC16xC9xC3"
    std::string spec() const { return format(factors_); }
    std::string canonical_spec() const { return format(invariant_factors_); }

    /// True when both presentations describe the same isomorphism class.
    bool isomorphic_to(const AbelianGroup& other) const {
        return invariant_factors_ == other.invariant_factors_;
    }

    GroupElement identity() const { return GroupElement{std::vector<u64>(factors_.size(), 0)}; }

    GroupElement generator(std::size_t factor) const {
        GroupElement g = identity();
        g.exponents.at(factor) = 1;
        return g;
    }

    bool contains(const GroupElement& g) const {
        if (g.exponents.size() != factors_.size()) return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (g.exponents[i] >= factors_[i]) return false;
        return true;
    }

    void check(const GroupElement& g) const {
        if (g.exponents.size() != factors_.size())
            fail(ErrorKind::ElementShapeMismatch, "element has " + std::to_string(g.exponents.size()) +
                                                      " coordinates, group has " +
                                                      std::to_string(factors_.size()) + " factors");
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (g.exponents[i] >= factors_[i])
                fail(ErrorKind::ElementShapeMismatch, "element coordinate out of range");
    }

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
        check(a);
        check(b);
        GroupElement r = identity();
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            u64 s = a.exponents[i] + b.exponents[i];
            r.exponents[i] = s >= factors_[i] ? s - factors_[i] : s;
        }
        return r;
    }

    GroupElement inverse(const GroupElement& a) const {
        check(a);
        GroupElement r = identity();
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r.exponents[i] = a.exponents[i] == 0 ? 0 : factors_[i] - a.exponents[i];
        return r;
    }

    /// g^k for any k >= 0.
    GroupElement power(const GroupElement& g, u128 k) const {
        check(g);
        GroupElement r = identity();
        for (std::size_t i = 0; i < factors_.size(); ++i)
            r.exponents[i] = static_cast<u64>(arith::mulmod(g.exponents[i], k, factors_[i]));
        return r;
    }

    u64 rank(const GroupElement& g) const {
        check(g);
        u64 r = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) r = r * factors_[i] + g.exponents[i];
        return r;
    }

    GroupElement element_at(u64 rank) const {
        if (rank >= order()) fail(ErrorKind::ElementShapeMismatch, "rank out of range");
        GroupElement g = identity();
        for (std::size_t i = factors_.size(); i-- > 0;) {
            g.exponents[i] = rank % factors_[i];
            rank /= factors_[i];
        }
        return g;
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

private:
    static std::string format(const std::vector<u64>& ds) {
        std::string s;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (i) s += "x";
            s += "C" + std::to_string(ds[i]);
        }
        return s;
    }

    // Split each factor into prime powers, then regroup the i-th largest
    // power of every prime into the i-th invariant factor from the top.
    static std::vector<u64> compute_invariant_factors(const std::vector<u64>& ds) {
        std::map<u64, std::vector<u64>> by_prime;
        for (u64 d : ds) {
            for (const auto& pp : arith::factorize(d).factors) {
                by_prime[static_cast<u64>(pp.prime)].push_back(
                    static_cast<u64>(arith::checked_pow(pp.prime, pp.multiplicity)));
            }
        }
        std::size_t m = 0;
        for (auto& [p, powers] : by_prime) {
            std::sort(powers.begin(), powers.end(), std::greater<>());
            m = std::max(m, powers.size());
        }
        std::vector<u64> chain(m, 1);
        for (const auto& [p, powers] : by_prime)
            for (std::size_t i = 0; i < powers.size(); ++i) chain[m - 1 - i] *= powers[i];
        return chain;
    }

    std::vector<u64> factors_;
    std::vector<u64> invariant_factors_;
    u128 order_ = 1;
    u128 exponent_ = 1;
};

/// Prime-power components d_i = s^e of every factor, as (s, s^e) pairs sorted.
inline std::vector<std::pair<u64, u64>> prime_power_components(const std::vector<u64>& ds) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 d : ds)
        for (const auto& pp : arith::factorize(d).factors)
            out.emplace_back(static_cast<u64>(pp.prime),
                             static_cast<u64>(arith::checked_pow(pp.prime, pp.multiplicity)));
    std::sort(out.begin(), out.end());
    return out;
}

/// Parses "C2669", "2x16x9x3", "c8xC8x16xc9". Each factor must be >= 2.
inline AbelianGroup parse_group(std::string_view spec) {
    std::vector<u64> factors;
    std::size_t i = 0;
    auto bad = [&](const std::string& why) -> AbelianGroup {
        fail(ErrorKind::ParseError, "bad group spec '" + std::string(spec) + "': " + why);
    };
    if (spec.empty()) return bad("empty");
    while (i < spec.size()) {
        if (spec[i] == 'C' || spec[i] == 'c') ++i;
        if (i < spec.size() && spec[i] == '_') ++i;
        std::size_t start = i;
        u128 v = 0;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) {
            v = v * 10 + static_cast<unsigned>(spec[i] - '0');
            if (v > u128{~u64{0}}) return bad("factor too large");
            ++i;
        }
        if (i == start) return bad("expected a factor order");
        if (v < 2) return bad("factor orders must be >= 2");
        factors.push_back(static_cast<u64>(v));
        if (i == spec.size()) break;
        if (spec[i] != 'x' && spec[i] != 'X' && spec[i] != '*') return bad("expected 'x' separator");
        ++i;
        if (i == spec.size()) return bad("trailing separator");
    }
    return AbelianGroup(std::move(factors));
}

/// lcm over coordinates of d_i / gcd(d_i, g_i).
inline u64 element_order(const AbelianGroup& G, const GroupElement& g) {
    G.check(g);
    u128 o = 1;
    const auto& ds = G.factor_orders();
    for (std::size_t i = 0; i < ds.size(); ++i) o = arith::lcm(o, ds[i] / arith::gcd(ds[i], g.exponents[i]));
    return static_cast<u64>(o);
}

/// Deterministic element of order exp(G). For every prime s | exp(G) the
/// first factor carrying the maximal power of s is chosen; a factor that
/// collects order m_i gets coordinate d_i / m_i.
inline GroupElement max_order_element(const AbelianGroup& G) {
    const auto& ds = G.factor_orders();
    std::vector<u64> assigned(ds.size(), 1);
    for (const auto& pp : arith::factorize(G.exponent()).factors) {
        u64 s_e = static_cast<u64>(arith::checked_pow(pp.prime, pp.multiplicity));
        for (std::size_t i = 0; i < ds.size(); ++i) {
            if (ds[i] % s_e == 0) {
                assigned[i] *= s_e;
                break;
            }
        }
    }
    GroupElement w = G.identity();
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (assigned[i] > 1) w.exponents[i] = ds[i] / assigned[i];
    return w;
}

inline void check_enumerable(const AbelianGroup& G, u64 cap = kDefaultEnumerationCap) {
    if (G.order() > cap)
        fail(ErrorKind::GroupTooLarge, "group order " + std::to_string(G.order()) + " exceeds enumeration cap " +
                                           std::to_string(cap));
}

/// Lazy view over all elements in lexicographic (rank) order, identity first.
inline auto enumerate_elements(const AbelianGroup& G, u64 cap = kDefaultEnumerationCap) {
    check_enumerable(G, cap);
    return std::views::iota(u64{0}, G.order()) |
           std::views::transform([G](u64 r) { return G.element_at(r); });
}

/// {g^k : gcd(k, o(g)) = 1}, sorted by rank.
inline std::vector<GroupElement> cyclic_class(const AbelianGroup& G, const GroupElement& g) {
    u64 o = element_order(G, g);
    std::vector<GroupElement> out;
    for (u64 k = 1; k <= o; ++k)
        if (std::gcd(k, o) == 1) out.push_back(G.power(g, k));
    std::sort(out.begin(), out.end(), [&G](const auto& a, const auto& b) { return G.rank(a) < G.rank(b); });
    return out;
}

}  // namespace ecdga
