#pragma once

/**
 * @file ffield.hpp
 * @brief Exact arithmetic in the tower F_p ⊆ F_q ⊆ F_{q^t}.
 *
 * - PrimeField: residues mod p.
 * - Extension<F>: F[x]/(f(x)) for a monic irreducible f over F; elements are
 *   dense coefficient vectors of length deg f, lowest degree first.
 * - BaseField: F_q = F_p[y]/(m(y)), with elements packed into one integer
 *   whose base-p digits are the coefficients. For 1 < alpha and q <= 2^20
 *   multiplication goes through discrete log tables.
 * - FieldTower: F_q together with F_{q^t} = F_q[x]/(f(x)). Keeping the two
 *   levels separate means an element of F_q inside F_{q^t} is simply a
 *   constant polynomial.
 *
 * All searches (irreducible moduli, primitive elements, roots of unity) are
 * seeded, so the same seed always yields the same field and the same roots.
 */

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ecdga/arith.hpp"
#include "ecdga/error.hpp"
#include "ecdga/poly.hpp"

namespace ecdga {

inline constexpr u64 kDefaultSeed = 20240601;

class PrimeField {
public:
    using Elem = u64;

    explicit PrimeField(u64 p) : p_(p) {
        if (!arith::is_prime(p)) fail(ErrorKind::InvalidField, std::to_string(p) + " is not prime");
    }

    u64 characteristic() const { return p_; }
    BigInt size() const { return BigInt(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(u64 k) const { return k % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return static_cast<Elem>(arith::addmod(a, b, p_)); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((u128{a} * b) % p_); }
    Elem inv(Elem a) const {
        if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
        return static_cast<Elem>(arith::powmod(a, p_ - 2, p_));
    }
    Elem random(std::mt19937_64& eng) const { return eng() % p_; }

private:
    u64 p_;
};

template <FiniteField F>
class Extension {
public:
    using Base = F;
    using Elem = std::vector<typename F::Elem>;

    /// `modulus` must be monic and irreducible over `base`.
    Extension(F base, poly::Poly<F> modulus) : base_(std::move(base)), modulus_(std::move(modulus)) {
        poly::trim(base_, modulus_);
        if (modulus_.size() < 2) fail(ErrorKind::InvalidField, "extension modulus must have degree >= 1");
        modulus_ = poly::make_monic(base_, std::move(modulus_));
        degree_ = modulus_.size() - 1;
        size_ = boost::multiprecision::pow(base_.size(), static_cast<unsigned>(degree_));
    }

    const F& base() const { return base_; }
    const poly::Poly<F>& modulus() const { return modulus_; }
    std::size_t degree() const { return degree_; }
    u64 characteristic() const { return base_.characteristic(); }
    BigInt size() const { return size_; }

    Elem zero() const { return Elem(degree_, base_.zero()); }
    Elem one() const { return embed(base_.one()); }
    Elem embed(const typename F::Elem& c) const {
        Elem e = zero();
        e[0] = c;
        return e;
    }
    Elem from_int(u64 k) const { return embed(base_.from_int(k)); }

    /// The polynomial x itself (x mod f when deg f = 1).
    Elem generator() const {
        if (degree_ == 1) return embed(base_.neg(modulus_[0]));
        Elem e = zero();
        e[1] = base_.one();
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (!base_.is_zero(c)) return false;
        return true;
    }

    /// True if a lies in the embedded base field (a constant polynomial).
    bool in_base(const Elem& a) const {
        for (std::size_t i = 1; i < a.size(); ++i)
            if (!base_.is_zero(a[i])) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(degree_);
        for (std::size_t i = 0; i < degree_; ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(degree_);
        for (std::size_t i = 0; i < degree_; ++i) r[i] = base_.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(degree_);
        for (std::size_t i = 0; i < degree_; ++i) r[i] = base_.neg(a[i]);
        return r;
    }
    Elem scale(const typename F::Elem& c, const Elem& a) const {
        Elem r(degree_);
        for (std::size_t i = 0; i < degree_; ++i) r[i] = base_.mul(c, a[i]);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (degree_ == 1) return Elem{base_.mul(a[0], b[0])};
        std::vector<typename F::Elem> prod(2 * degree_ - 1, base_.zero());
        for (std::size_t i = 0; i < degree_; ++i) {
            if (base_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < degree_; ++j) {
                if (base_.is_zero(b[j])) continue;
                prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
            }
        }
        for (std::size_t k = prod.size(); k-- > degree_;) {
            const auto c = prod[k];
            if (base_.is_zero(c)) continue;
            const std::size_t shift = k - degree_;
            for (std::size_t i = 0; i < degree_; ++i)
                prod[shift + i] = base_.sub(prod[shift + i], base_.mul(c, modulus_[i]));
        }
        prod.resize(degree_);
        return prod;
    }

    Elem pow(const Elem& a, const BigInt& e) const { return field_pow(*this, a, e); }
    Elem pow(const Elem& a, u64 e) const { return field_pow(*this, a, e); }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) fail(ErrorKind::DivisionByZero, "inverse of zero");
        return pow(a, BigInt(size_ - 2));
    }

    Elem random(std::mt19937_64& eng) const {
        Elem r(degree_);
        for (auto& c : r) c = base_.random(eng);
        return r;
    }

private:
    F base_;
    poly::Poly<F> modulus_;
    std::size_t degree_ = 1;
    BigInt size_;
};

/// F_q = F_p[y]/(m(y)) with packed integer elements in [0, q).
class BaseField {
public:
    using Elem = u64;

    static constexpr u64 kLogTableLimit = u64{1} << 20;

    BaseField(u64 p, unsigned alpha, u64 seed = kDefaultSeed)
        : BaseField(PrimeField(p), alpha, seed) {}

    u64 characteristic() const { return p_; }
    unsigned alpha() const { return alpha_; }
    u64 order() const { return q_; }
    BigInt size() const { return BigInt(q_); }
    const std::vector<u64>& modulus() const { return ext_.modulus(); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(u64 k) const { return k % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    /// True for elements of the prime subfield (constant polynomials).
    bool in_prime_field(Elem a) const { return a < p_; }

    Elem add(Elem a, Elem b) const {
        if (alpha_ == 1) return static_cast<Elem>(arith::addmod(a, b, p_));
        if (p_ == 2) return a ^ b;
        Elem r = 0, w = 1;
        for (unsigned i = 0; i < alpha_; ++i) {
            u64 d = (a % p_ + b % p_) % p_;
            r += d * w;
            a /= p_;
            b /= p_;
            w *= p_;
        }
        return r;
    }
    Elem neg(Elem a) const {
        if (alpha_ == 1) return a == 0 ? 0 : p_ - a;
        if (p_ == 2) return a;
        Elem r = 0, w = 1;
        for (unsigned i = 0; i < alpha_; ++i) {
            u64 d = a % p_;
            r += (d == 0 ? 0 : p_ - d) * w;
            a /= p_;
            w *= p_;
        }
        return r;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (alpha_ == 1) return static_cast<Elem>((u128{a} * b) % p_);
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) {
            u64 s = log_[a] + log_[b];
            if (s >= q_ - 1) s -= q_ - 1;
            return exp_[s];
        }
        return encode(ext_.mul(decode(a), decode(b)));
    }

    Elem inv(Elem a) const {
        if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
        if (alpha_ == 1) return static_cast<Elem>(arith::powmod(a, p_ - 2, p_));
        if (!log_.empty()) return exp_[log_[a] == 0 ? 0 : q_ - 1 - log_[a]];
        return encode(ext_.inv(decode(a)));
    }

    Elem pow(Elem a, u64 e) const { return field_pow(*this, a, e); }

    /// a -> a^p
    Elem frobenius(Elem a) const { return pow(a, p_); }

    Elem random(std::mt19937_64& eng) const { return eng() % q_; }

    /// Coefficients over F_p, lowest degree first, length alpha.
    std::vector<u64> decode(Elem a) const {
        std::vector<u64> d(alpha_);
        for (unsigned i = 0; i < alpha_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }

    Elem encode(const std::vector<u64>& digits) const {
        Elem r = 0;
        for (std::size_t i = digits.size(); i-- > 0;) r = r * p_ + digits[i] % p_;
        return r;
    }

private:
    BaseField(PrimeField fp, unsigned alpha, u64 seed)
        : p_(fp.characteristic()),
          alpha_(alpha),
          q_(checked_q(fp.characteristic(), alpha)),
          ext_(fp, alpha == 1 ? poly::x_poly(fp) : poly::find_irreducible(fp, alpha, seed)) {
        if (alpha_ > 1 && q_ <= kLogTableLimit) build_log_tables();
    }

    static u64 checked_q(u64 p, unsigned alpha) {
        if (alpha == 0) fail(ErrorKind::InvalidField, "alpha must be positive");
        u128 q = arith::checked_pow(p, alpha);
        if ((q >> 63) != 0) fail(ErrorKind::Overflow, "q exceeds 63 bits");
        return static_cast<u64>(q);
    }

    void build_log_tables() {
        const u64 n = q_ - 1;
        const auto primes = arith::factorize(n).primes();
        for (u64 cand = p_; cand < q_; ++cand) {
            auto c = decode(cand);
            bool primitive = true;
            for (u128 r : primes) {
                auto v = ext_.pow(c, static_cast<u64>(n / r));
                if (v == ext_.one()) {
                    primitive = false;
                    break;
                }
            }
            if (!primitive) continue;
            exp_.assign(n, 0);
            log_.assign(q_, 0);
            auto x = ext_.one();
            for (u64 k = 0; k < n; ++k) {
                u64 code = encode(x);
                exp_[k] = code;
                log_[code] = k;
                x = ext_.mul(x, c);
            }
            return;
        }
        fail(ErrorKind::InvalidField, "no primitive element found");
    }

    u64 p_;
    unsigned alpha_;
    u64 q_;
    Extension<PrimeField> ext_;
    std::vector<u64> exp_;
    std::vector<u64> log_;
};

using ExtensionField = Extension<BaseField>;

/// Plain description of a tower, suitable for display and JSON.
struct FieldDesc {
    u64 p = 0;
    unsigned alpha = 1;
    unsigned t = 1;
    std::vector<u64> base_modulus;               // over F_p
    std::vector<std::vector<u64>> ext_modulus;   // over F_q, each coefficient in F_p digits
    u64 seed = kDefaultSeed;

    u64 q() const { return static_cast<u64>(arith::checked_pow(p, alpha)); }
};

/// "[1,1,1]" for x^2 + x + 1.
inline std::string format_poly(const std::vector<u64>& coeffs) {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs[i]);
    }
    return s + "]";
}

inline std::string format_poly(const std::vector<std::vector<u64>>& coeffs) {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += format_poly(coeffs[i]);
    }
    return s + "]";
}

class FieldTower {
public:
    FieldTower(u64 p, unsigned alpha, unsigned t, u64 seed = kDefaultSeed)
        : base_(std::make_shared<const BaseField>(p, alpha, seed)),
          ext_(*base_, find_ext_modulus(*base_, t, seed)),
          seed_(seed) {}

    /// Extension of degree t over an existing F_q.
    FieldTower(std::shared_ptr<const BaseField> base, unsigned t, u64 seed = kDefaultSeed)
        : base_(std::move(base)), ext_(*base_, find_ext_modulus(*base_, t, seed)), seed_(seed) {}

    const BaseField& base() const { return *base_; }
    const ExtensionField& ext() const { return ext_; }
    u64 p() const { return base_->characteristic(); }
    u64 q() const { return base_->order(); }
    unsigned alpha() const { return base_->alpha(); }
    unsigned t() const { return static_cast<unsigned>(ext_.degree()); }
    u64 seed() const { return seed_; }

    FieldDesc desc() const {
        FieldDesc d;
        d.p = p();
        d.alpha = alpha();
        d.t = t();
        d.base_modulus = base_->modulus();
        for (u64 c : ext_.modulus()) d.ext_modulus.push_back(base_->decode(c));
        d.seed = seed_;
        return d;
    }

private:
    static poly::Poly<BaseField> find_ext_modulus(const BaseField& b, unsigned t, u64 seed) {
        if (t == 0) fail(ErrorKind::InvalidField, "extension degree must be positive");
        if (t == 1) return poly::x_poly(b);
        return poly::find_irreducible(b, t, seed + 1);
    }

    std::shared_ptr<const BaseField> base_;
    ExtensionField ext_;
    u64 seed_;
};

enum class FrobeniusLevel { Prime, Base };

/// e -> e^p (Prime) or e -> e^q (Base). The Base map generates Gal(F_{q^t}/F_q).
inline ExtensionField::Elem frobenius(const FieldTower& F, const ExtensionField::Elem& e,
                                      FrobeniusLevel level = FrobeniusLevel::Base) {
    return F.ext().pow(e, level == FrobeniusLevel::Base ? F.q() : F.p());
}

/// Exact multiplicative order; needs |F| - 1 < 2^127.
template <FiniteField F>
u128 element_mult_order(const F& field, const typename F::Elem& e, const arith::FactorizeOptions& opts = {}) {
    if (field.is_zero(e)) fail(ErrorKind::DivisionByZero, "zero has no multiplicative order");
    BigInt n_big = field.size() - 1;
    if (boost::multiprecision::msb(n_big) >= 127) fail(ErrorKind::Overflow, "|F| - 1 exceeds the 127-bit budget");
    u128 n = 0;
    for (int b = static_cast<int>(boost::multiprecision::msb(n_big)); b >= 0; --b)
        n = (n << 1) | (boost::multiprecision::bit_test(n_big, static_cast<unsigned>(b)) ? 1 : 0);
    u128 m = n;
    for (const auto& pp : arith::factorize(n, opts).factors) {
        for (unsigned i = 0; i < pp.multiplicity; ++i) {
            auto v = field_pow(field, e, BigInt(arith::to_string(m / pp.prime)));
            if (!(v == field.one())) break;
            m /= pp.prime;
        }
    }
    return m;
}

/// An element of multiplicative order exactly n in F_{q^t}.
/// Throws NoSuchRoot unless n | q^t - 1.
inline ExtensionField::Elem primitive_root_of_unity(const FieldTower& F, u64 n, u64 seed = kDefaultSeed) {
    if (n == 0) fail(ErrorKind::InvalidRequest, "root of unity order must be positive");
    const auto& ext = F.ext();
    if (n == 1) return ext.one();
    if (arith::powmod(F.q(), F.t(), n) != 1)
        fail(ErrorKind::NoSuchRoot, "F_" + std::to_string(F.q()) + "^" + std::to_string(F.t()) +
                                        " has no primitive " + std::to_string(n) + "-th root of unity");
    const BigInt cofactor = (ext.size() - 1) / n;
    const auto primes = arith::factorize(n).primes();
    std::mt19937_64 eng(seed ^ (0xd1b54a32d192ed03ULL * n));
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        auto r = ext.random(eng);
        if (ext.is_zero(r)) continue;
        auto theta = ext.pow(r, cofactor);
        bool primitive = true;
        for (u128 s : primes) {
            if (ext.pow(theta, static_cast<u64>(n / s)) == ext.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return theta;
    }
    fail(ErrorKind::PredicateMismatch, "no primitive root found although n | q^t - 1");
}

}  // namespace ecdga
