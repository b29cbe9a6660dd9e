#pragma once

/**
 * @file arith.hpp
 * @brief Exact 128-bit number theory: factorization, totients, orders, divisors.
 *
 * Everything here works on unsigned 128-bit integers. Primality uses
 * Miller-Rabin with the fixed witness set {2,...,37}, which is deterministic
 * below 2^64. Composite cofactors that survive trial division up to 10^5 are
 * split with Pollard's rho using Brent's cycle detection; the polynomial
 * sequence x^2 + c is walked with c = 1, 2, 3, ... so results are reproducible.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ecdga/error.hpp"

namespace ecdga {

using u128 = unsigned __int128;
using u64 = std::uint64_t;

namespace arith {

inline constexpr u128 kU128Max = ~u128{0};
inline constexpr u64 kTrialDivisionBound = 100000;
inline constexpr u64 kDefaultRhoIterations = u64{1} << 24;
inline constexpr std::size_t kDefaultDivisorCap = 1000000;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

constexpr u128 gcd(u128 a, u128 b) {
    while (b != 0) {
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// lcm with overflow detection.
inline u128 lcm(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    u128 g = gcd(a, b);
    u128 x = a / g;
    if (x > kU128Max / b) fail(ErrorKind::Overflow, "lcm exceeds 128 bits");
    return x * b;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a != 0 && b > kU128Max / a) fail(ErrorKind::Overflow, "product exceeds 128 bits");
    return a * b;
}

inline u128 checked_pow(u128 base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

constexpr u128 addmod(u128 a, u128 b, u128 n) {
    // a, b < n
    return (a >= n - b) ? a - (n - b) : a + b;
}

/// (a * b) mod n for any n >= 1. Direct when n < 2^64, shift-and-add above.
constexpr u128 mulmod(u128 a, u128 b, u128 n) {
    if (n <= 1) return 0;
    a %= n;
    b %= n;
    if ((n >> 64) == 0) return (a * b) % n;
    u128 r = 0;
    while (b != 0) {
        if (b & 1) r = addmod(r, a, n);
        a = addmod(a, a, n);
        b >>= 1;
    }
    return r;
}

constexpr u128 powmod(u128 base, u128 exp, u128 n) {
    if (n == 1) return 0;
    u128 r = 1;
    base %= n;
    while (exp != 0) {
        if (exp & 1) r = mulmod(r, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return r;
}

/// Integer square root (floor).
inline u128 isqrt(u128 n) {
    if (n < 2) return n;
    u128 x = static_cast<u128>(__builtin_sqrtl(static_cast<long double>(n)));
    while (x > 0 && (x > n / x)) --x;
    while ((x + 1) <= n / (x + 1)) ++x;
    return x;
}

inline bool is_prime(u128 n) {
    if (n < 2) return false;
    static constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    u128 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 w : witnesses) {
        u128 x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct PrimePower {
    u128 prime;
    unsigned multiplicity;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete prime factorization. `factors` is sorted by strictly increasing prime.
struct Factorization {
    u128 value = 1;
    std::vector<PrimePower> factors;

    u128 recompose() const {
        u128 r = 1;
        for (const auto& f : factors) r = checked_mul(r, checked_pow(f.prime, f.multiplicity));
        return r;
    }

    std::vector<u128> primes() const {
        std::vector<u128> out;
        out.reserve(factors.size());
        for (const auto& f : factors) out.push_back(f.prime);
        return out;
    }

    /// "2^5 * 3^2 * 7"
    std::string to_string() const {
        if (factors.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " * ";
            s += arith::to_string(factors[i].prime);
            if (factors[i].multiplicity > 1) s += "^" + std::to_string(factors[i].multiplicity);
        }
        return s;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorizeOptions {
    u64 rho_iteration_cap = kDefaultRhoIterations;
};

namespace detail {

// Brent's variant of Pollard rho for one polynomial x^2 + c.
// Returns a nontrivial factor or 0 if this c failed; `budget` is decremented.
inline u128 brent_rho(u128 n, u128 c, u64& budget) {
    constexpr u64 kBatch = 128;
    u128 y = 2, x = 2, ys = 2, q = 1, g = 1;
    u64 r = 1;
    auto f = [&](u128 v) { return addmod(mulmod(v, v, n), c % n, n); };
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        do {
            ys = y;
            u64 m = std::min<u64>(kBatch, r - k);
            for (u64 i = 0; i < m; ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            if (budget < m) fail(ErrorKind::FactorizationBudgetExceeded,
                                 "Pollard rho budget exhausted factoring " + to_string(n));
            budget -= m;
            g = gcd(q, n);
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        // Backtrack one step at a time from the last saved point.
        do {
            ys = f(ys);
            g = gcd(x > ys ? x - ys : ys - x, n);
            if (budget == 0) fail(ErrorKind::FactorizationBudgetExceeded,
                                  "Pollard rho budget exhausted factoring " + to_string(n));
            --budget;
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

inline void split_composite(u128 n, std::vector<u128>& out, u64& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u128 r = isqrt(n);
    if (r * r == n) {
        split_composite(r, out, budget);
        split_composite(r, out, budget);
        return;
    }
    for (u128 c = 1;; ++c) {
        u128 d = brent_rho(n, c, budget);
        if (d != 0) {
            split_composite(d, out, budget);
            split_composite(n / d, out, budget);
            return;
        }
    }
}

}  // namespace detail

/// Prime factorization of 1 <= n < 2^127. n = 1 gives the empty product.
inline Factorization factorize(u128 n, const FactorizeOptions& opts = {}) {
    if (n == 0) fail(ErrorKind::InvalidRequest, "factorize: n must be positive");
    if ((n >> 127) != 0) fail(ErrorKind::Overflow, "factorize: n must be below 2^127");
    Factorization f;
    f.value = n;
    std::vector<u128> primes;
    u128 m = n;
    auto strip = [&](u64 d) {
        while (m % d == 0) {
            primes.push_back(d);
            m /= d;
        }
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d <= kTrialDivisionBound && u128{d} * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) {
        u64 budget = opts.rho_iteration_cap;
        detail::split_composite(m, primes, budget);
    }
    std::sort(primes.begin(), primes.end());
    for (u128 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().multiplicity;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

inline u128 euler_phi(const Factorization& f) {
    u128 r = 1;
    for (const auto& pp : f.factors) r *= checked_pow(pp.prime, pp.multiplicity - 1) * (pp.prime - 1);
    return r;
}

inline u128 euler_phi(u128 n) {
    if (n == 0) fail(ErrorKind::InvalidRequest, "euler_phi: n must be positive");
    return euler_phi(factorize(n));
}

/// Carmichael function: exponent of the unit group (Z/nZ)^*.
inline u128 carmichael_lambda(const Factorization& f) {
    u128 r = 1;
    for (const auto& pp : f.factors) {
        u128 part;
        if (pp.prime == 2) {
            part = pp.multiplicity == 1 ? 1 : pp.multiplicity == 2 ? 2 : (u128{1} << (pp.multiplicity - 2));
        } else {
            part = checked_pow(pp.prime, pp.multiplicity - 1) * (pp.prime - 1);
        }
        r = lcm(r, part);
    }
    return r;
}

/// Least m >= 1 with a^m = 1 (mod n), by stripping prime factors of lambda(n).
inline u128 mul_order(u128 a, u128 n, const FactorizeOptions& opts = {}) {
    if (n == 0) fail(ErrorKind::InvalidRequest, "mul_order: modulus must be positive");
    if (n == 1) return 1;
    if (gcd(a % n, n) != 1)
        fail(ErrorKind::NotCoprime, "mul_order: gcd(" + to_string(a) + ", " + to_string(n) + ") != 1");
    u128 m = carmichael_lambda(factorize(n, opts));
    Factorization lf = factorize(m, opts);
    for (const auto& pp : lf.factors) {
        for (unsigned i = 0; i < pp.multiplicity; ++i) {
            if (powmod(a, m / pp.prime, n) != 1) break;
            m /= pp.prime;
        }
    }
    return m;
}

/// Linear-scan reference for mul_order; only meant for small moduli.
inline u64 mul_order_by_scan(u64 a, u64 n) {
    if (n == 1) return 1;
    if (gcd(a % n, n) != 1) fail(ErrorKind::NotCoprime, "mul_order_by_scan: not coprime");
    u64 x = a % n;
    for (u64 m = 1;; ++m) {
        if (x == 1) return m;
        x = static_cast<u64>((u128{x} * a) % n);
    }
}

/// All divisors of f.value in increasing order.
inline std::vector<u128> divisors(const Factorization& f, std::size_t cap = kDefaultDivisorCap) {
    std::size_t count = 1;
    for (const auto& pp : f.factors) {
        if (count > cap / (pp.multiplicity + 1))
            fail(ErrorKind::TooManyDivisors, "divisor count exceeds cap " + std::to_string(cap));
        count *= pp.multiplicity + 1;
    }
    if (count > cap) fail(ErrorKind::TooManyDivisors, "divisor count exceeds cap " + std::to_string(cap));
    std::vector<u128> out{1};
    out.reserve(count);
    for (const auto& pp : f.factors) {
        std::size_t prev = out.size();
        u128 pk = 1;
        for (unsigned e = 1; e <= pp.multiplicity; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < prev; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// If n = p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
inline PrimePower prime_power_decomposition(u128 n) {
    if (n < 2) return {0, 0};
    Factorization f = factorize(n);
    if (f.factors.size() != 1) return {0, 0};
    return f.factors.front();
}

}  // namespace arith
}  // namespace ecdga
