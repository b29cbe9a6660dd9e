#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over any finite field type.
 *
 * A polynomial is a std::vector of field elements, lowest degree first, with
 * no trailing zeros (the zero polynomial is the empty vector). Every routine
 * takes the coefficient field explicitly so the same code serves F_p and F_q.
 */

#include <concepts>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecdga/arith.hpp"
#include "ecdga/error.hpp"

namespace ecdga {

using BigInt = boost::multiprecision::cpp_int;

// clang-format off
template <class F>
concept FiniteField = requires(const F& f, const typename F::Elem& a, std::mt19937_64& eng, u64 k) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.one() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.neg(a) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.from_int(k) } -> std::convertible_to<typename F::Elem>;
    { f.random(eng) } -> std::convertible_to<typename F::Elem>;
    { f.size() } -> std::convertible_to<BigInt>;
    { f.characteristic() } -> std::convertible_to<u64>;
};
// clang-format on

/// Square-and-multiply with an arbitrary nonnegative exponent.
template <FiniteField F>
typename F::Elem field_pow(const F& f, typename F::Elem base, BigInt e) {
    typename F::Elem r = f.one();
    while (e != 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = f.mul(r, base);
        e >>= 1;
        if (e != 0) base = f.mul(base, base);
    }
    return r;
}

template <FiniteField F>
typename F::Elem field_pow(const F& f, typename F::Elem base, u64 e) {
    typename F::Elem r = f.one();
    while (e != 0) {
        if (e & 1) r = f.mul(r, base);
        e >>= 1;
        if (e != 0) base = f.mul(base, base);
    }
    return r;
}

namespace poly {

template <FiniteField F>
using Poly = std::vector<typename F::Elem>;

template <FiniteField F>
void trim(const F& f, Poly<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

/// -1 for the zero polynomial.
template <FiniteField F>
long degree(const Poly<F>& a) {
    return static_cast<long>(a.size()) - 1;
}

template <FiniteField F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    trim(f, r);
    return r;
}

template <FiniteField F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    trim(f, r);
    return r;
}

template <FiniteField F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(f, r);
    return r;
}

/// Remainder of a modulo a nonzero m.
template <FiniteField F>
Poly<F> mod(const F& f, Poly<F> a, const Poly<F>& m) {
    if (m.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    trim(f, a);
    const std::size_t dm = m.size() - 1;
    const auto lead_inv = f.inv(m.back());
    while (a.size() > dm) {
        auto c = f.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
        trim(f, a);
    }
    return a;
}

template <FiniteField F>
Poly<F> make_monic(const F& f, Poly<F> a) {
    if (a.empty()) return a;
    auto inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
    return a;
}

/// Monic gcd (zero if both are zero).
template <FiniteField F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
    trim(f, a);
    trim(f, b);
    while (!b.empty()) {
        Poly<F> r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, std::move(a));
}

template <FiniteField F>
Poly<F> powmod(const F& f, Poly<F> base, BigInt e, const Poly<F>& m) {
    Poly<F> r = mod(f, Poly<F>{f.one()}, m);
    base = mod(f, std::move(base), m);
    while (e != 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = mod(f, mul(f, r, base), m);
        e >>= 1;
        if (e != 0) base = mod(f, mul(f, base, base), m);
    }
    return r;
}

template <FiniteField F>
Poly<F> x_poly(const F& f) {
    return Poly<F>{f.zero(), f.one()};
}

/// Rabin's test: f of degree n is irreducible iff x^{Q^n} = x mod f and
/// gcd(x^{Q^{n/r}} - x, f) = 1 for every prime r | n, where Q = |F|.
template <FiniteField F>
bool is_irreducible(const F& f, Poly<F> m) {
    trim(f, m);
    const long n = degree<F>(m);
    if (n < 1) return false;
    if (n == 1) return true;
    m = make_monic(f, std::move(m));
    const BigInt Q = f.size();
    const Poly<F> x = x_poly(f);
    std::vector<u64> prime_divs;
    for (const auto& pp : arith::factorize(static_cast<u128>(n)).factors)
        prime_divs.push_back(static_cast<u64>(pp.prime));
    // x^{Q^k} mod m for k = 0..n
    std::vector<Poly<F>> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = mod(f, x, m);
    for (long k = 1; k <= n; ++k) frob[k] = powmod(f, frob[k - 1], Q, m);
    if (sub(f, frob[n], frob[0]).size() != 0) return false;
    for (u64 r : prime_divs) {
        Poly<F> g = gcd(f, sub(f, frob[static_cast<std::size_t>(n / static_cast<long>(r))], frob[0]), m);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Ben-Or's test: f of degree n is irreducible iff gcd(x^{Q^k} - x, f) = 1
/// for k = 1..n/2. Rejects polynomials with small factors after a few steps.
template <FiniteField F>
bool has_no_small_factor(const F& f, Poly<F> m) {
    trim(f, m);
    const long n = degree<F>(m);
    if (n < 1) return false;
    m = make_monic(f, std::move(m));
    const BigInt Q = f.size();
    const Poly<F> x = mod(f, x_poly(f), m);
    Poly<F> h = x;
    for (long k = 1; 2 * k <= n; ++k) {
        h = powmod(f, h, Q, m);
        if (gcd(f, sub(f, h, x), m).size() != 1) return false;
    }
    return true;
}

/// Deterministic seeded search for a monic irreducible of the given degree.
/// Candidates are screened with Ben-Or and the winner is confirmed with Rabin.
template <FiniteField F>
Poly<F> find_irreducible(const F& f, unsigned deg, u64 seed) {
    if (deg == 0) fail(ErrorKind::InvalidField, "irreducible polynomial degree must be positive");
    std::mt19937_64 eng(seed ^ (0x9e3779b97f4a7c15ULL * (deg + 1)));
    for (;;) {
        Poly<F> cand(deg + 1, f.zero());
        for (unsigned i = 0; i < deg; ++i) cand[i] = f.random(eng);
        cand[deg] = f.one();
        if (!has_no_small_factor(f, cand)) continue;
        if (!is_irreducible(f, cand)) fail(ErrorKind::PredicateMismatch, "Ben-Or and Rabin tests disagree");
        return cand;
    }
}

}  // namespace poly
}  // namespace ecdga
