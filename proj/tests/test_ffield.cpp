#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ecdga/ffield.hpp"
#include "ecdga/orbits.hpp"
#include "oracles.hpp"

using namespace ecdga;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an ecdga::Error";
    return ErrorKind::InvalidRequest;
}

// Every element of a small extension, by its base-q digits.
std::vector<ExtensionField::Elem> all_elements(const FieldTower& F) {
    const u64 q = F.q(), size = static_cast<u64>(F.ext().size());
    std::vector<ExtensionField::Elem> out;
    for (u64 code = 0; code < size; ++code) {
        ExtensionField::Elem x(F.t());
        u64 c = code;
        for (auto& d : x) {
            d = c % q;
            c /= q;
        }
        out.push_back(x);
    }
    return out;
}

template <class Fld>
void field_axioms(const Fld& f, u64 seed, int rounds = 200) {
    std::mt19937_64 eng(seed);
    for (int i = 0; i < rounds; ++i) {
        auto a = f.random(eng), b = f.random(eng), c = f.random(eng);
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        ASSERT_EQ(f.add(a, f.neg(a)), f.zero());
        if (!f.is_zero(a)) ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
    }
}

}  // namespace

TEST(FindIrreducible, Examples) {
    PrimeField f5(5), f2(2);
    auto lin = poly::find_irreducible(f5, 1, 1);
    ASSERT_EQ(lin.size(), 2u);
    EXPECT_EQ(lin[1], 1u);
    EXPECT_EQ(poly::find_irreducible(f2, 2, 99), (poly::Poly<PrimeField>{1, 1, 1}));
    auto quad = poly::find_irreducible(f5, 2, 3);
    ASSERT_EQ(quad.size(), 3u);
    for (u64 x = 0; x < 5; ++x) EXPECT_NE((quad[0] + quad[1] * x + quad[2] * x * x) % 5, 0u) << x;
}

TEST(FindIrreducible, DeterministicPerSeed) {
    PrimeField f3(3);
    EXPECT_EQ(poly::find_irreducible(f3, 7, 42), poly::find_irreducible(f3, 7, 42));
    EXPECT_EQ(kind_of([&] { poly::find_irreducible(f3, 0, 1); }), ErrorKind::InvalidField);
}

TEST(Irreducibility, RabinAndBenOrAgreeWithExhaustiveCount) {
    // Number of monic irreducibles of degree n over F_p is (1/n) Σ_{d|n} μ(d) p^{n/d}.
    PrimeField f2(2), f3(3);
    auto count = [](const PrimeField& f, unsigned n) {
        const u64 p = f.characteristic();
        u64 total = 1;
        for (unsigned i = 0; i < n; ++i) total *= p;
        u64 irr = 0;
        for (u64 code = 0; code < total; ++code) {
            poly::Poly<PrimeField> m(n + 1);
            u64 c = code;
            for (unsigned i = 0; i < n; ++i) {
                m[i] = c % p;
                c /= p;
            }
            m[n] = 1;
            const bool rabin = poly::is_irreducible(f, m);
            EXPECT_EQ(rabin, poly::has_no_small_factor(f, m));
            if (rabin) ++irr;
        }
        return irr;
    };
    EXPECT_EQ(count(f2, 4), 3u);
    EXPECT_EQ(count(f2, 6), 9u);
    EXPECT_EQ(count(f3, 4), 18u);
    EXPECT_EQ(count(f3, 5), 48u);
}

TEST(PrimeField, Axioms) {
    field_axioms(PrimeField(2), 1);
    field_axioms(PrimeField(1000003), 2);
    EXPECT_EQ(kind_of([] { PrimeField(9); }), ErrorKind::InvalidField);
    EXPECT_EQ(kind_of([] { PrimeField(7).inv(0); }), ErrorKind::DivisionByZero);
}

TEST(BaseField, F4Arithmetic) {
    BaseField f4(2, 2);
    EXPECT_EQ(f4.modulus(), (std::vector<u64>{1, 1, 1}));
    const u64 x = f4.encode({0, 1}), x1 = f4.encode({1, 1});
    EXPECT_EQ(f4.mul(x, x1), f4.one());
    EXPECT_EQ(f4.mul(x, x), x1);
}

TEST(BaseField, AxiomsAcrossRepresentations) {
    for (auto [p, a] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {5, 1}, {2, 4}, {3, 3}, {5, 2}, {5, 6}, {7, 2},
                                                             {2, 24}, {3, 13}}) {
        BaseField f(p, a);
        field_axioms(f, p * 100 + a);
        std::mt19937_64 eng(a);
        for (int i = 0; i < 50; ++i) {
            u64 v = f.random(eng);
            ASSERT_EQ(f.pow(v, f.order()), v);
            ASSERT_EQ(f.encode(f.decode(v)), v);
        }
    }
}

TEST(BaseField, LogTablesMatchSlowPath) {
    // A log-table field and the polynomial path must agree on every product.
    BaseField f(3, 4);
    const auto& m = f.modulus();
    PrimeField f3(3);
    Extension<PrimeField> slow(f3, poly::Poly<PrimeField>(m.begin(), m.end()));
    for (u64 a = 0; a < f.order(); a += 3)
        for (u64 b = 0; b < f.order(); b += 5) {
            auto prod = slow.mul(f.decode(a), f.decode(b));
            ASSERT_EQ(f.mul(a, b), f.encode(prod));
        }
}

TEST(Extension, AxiomsAndFermat) {
    for (auto [p, a, t] : std::vector<std::tuple<u64, unsigned, unsigned>>{{2, 1, 5}, {3, 2, 3}, {5, 2, 10}, {13, 1, 12}}) {
        FieldTower F(p, a, t);
        field_axioms(F.ext(), p + t, 60);
        std::mt19937_64 eng(t);
        for (int i = 0; i < 10; ++i) {
            auto x = F.ext().random(eng);
            ASSERT_EQ(F.ext().pow(x, F.ext().size()), x);
        }
    }
    FieldTower F(2, 1, 3);
    EXPECT_EQ(kind_of([&] { F.ext().inv(F.ext().zero()); }), ErrorKind::DivisionByZero);
}

TEST(FieldTower, DescriptionAndDeterminism) {
    FieldTower A(5, 2, 3, 7), B(5, 2, 3, 7);
    auto da = A.desc(), db = B.desc();
    EXPECT_EQ(da.base_modulus, db.base_modulus);
    EXPECT_EQ(da.ext_modulus, db.ext_modulus);
    EXPECT_EQ(da.q(), 25u);
    EXPECT_EQ(da.t, 3u);
    EXPECT_EQ(da.ext_modulus.size(), 4u);
    EXPECT_EQ(format_poly({1, 1, 1}), "[1,1,1]");
    EXPECT_EQ(format_poly(std::vector<std::vector<u64>>{{1, 0}, {0, 1}}), "[[1,0],[0,1]]");
}

TEST(Frobenius, FixesExactlyTheBaseField) {
    for (auto [p, a, t] : std::vector<std::tuple<u64, unsigned, unsigned>>{{2, 2, 3}, {3, 1, 4}, {5, 2, 2}, {2, 3, 5}}) {
        FieldTower F(p, a, t);
        u64 fixed = 0;
        for (const auto& x : all_elements(F)) {
            const bool is_fixed = frobenius(F, x) == x;
            ASSERT_EQ(is_fixed, F.ext().in_base(x));
            if (is_fixed) ++fixed;
        }
        EXPECT_EQ(fixed, F.q());
    }
}

TEST(Frobenius, HomomorphismAndPeriod) {
    FieldTower F(3, 2, 5);
    const auto& E = F.ext();
    std::mt19937_64 eng(1);
    for (int i = 0; i < 50; ++i) {
        auto a = E.random(eng), b = E.random(eng);
        ASSERT_EQ(frobenius(F, E.add(a, b)), E.add(frobenius(F, a), frobenius(F, b)));
        ASSERT_EQ(frobenius(F, E.mul(a, b)), E.mul(frobenius(F, a), frobenius(F, b)));
        auto c = a;
        for (unsigned k = 0; k < F.t(); ++k) c = frobenius(F, c);
        ASSERT_EQ(c, a);
        auto d = a;
        for (unsigned k = 0; k < F.t() * F.alpha(); ++k) d = frobenius(F, d, FrobeniusLevel::Prime);
        ASSERT_EQ(d, a);
    }
    const auto theta = primitive_root_of_unity(F, 11 * 2);
    EXPECT_EQ(element_mult_order(E, frobenius(F, theta)), 22u);
}

TEST(PrimitiveRoot, Examples) {
    FieldTower F4(2, 2, 1);
    EXPECT_EQ(primitive_root_of_unity(F4, 1), F4.ext().one());
    auto w = primitive_root_of_unity(F4, 3);
    EXPECT_EQ(F4.ext().pow(w, u64{3}), F4.ext().one());
    EXPECT_NE(w, F4.ext().one());
    FieldTower big(5, 2, 10);
    EXPECT_EQ(element_mult_order(big.ext(), primitive_root_of_unity(big, 176)), 176u);
    FieldTower F25(5, 2, 3);
    EXPECT_EQ(kind_of([&] { primitive_root_of_unity(F25, 176); }), ErrorKind::NoSuchRoot);
}

TEST(PrimitiveRoot, ExistsIffDivisibilityHolds) {
    for (auto [p, a] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {7, 1}}) {
        auto base = std::make_shared<const BaseField>(p, a);
        const u64 q = base->order();
        for (unsigned t = 1; t <= 4; ++t) {
            FieldTower F(base, t);
            const auto elems = all_elements(F);
            if (elems.size() > 5000) continue;
            std::set<u64> orders;
            for (const auto& x : elems)
                if (!F.ext().is_zero(x)) orders.insert(static_cast<u64>(element_mult_order(F.ext(), x)));
            for (u64 n = 1; n <= 60; ++n) {
                if (std::gcd(n, p) != 1) continue;
                const bool divides = arith::powmod(q, t, n) == 1 % n;
                ASSERT_EQ(orders.count(n) == 1, divides);
                bool ok = true;
                try {
                    auto th = primitive_root_of_unity(F, n);
                    ASSERT_EQ(element_mult_order(F.ext(), th), n);
                } catch (const Error& e) {
                    ASSERT_EQ(e.kind(), ErrorKind::NoSuchRoot);
                    ok = false;
                }
                ASSERT_EQ(ok, divides) << "q=" << q << " t=" << t << " n=" << n;
            }
        }
    }
}

TEST(ElementMultOrder, Examples) {
    FieldTower F9(3, 2, 1);
    EXPECT_EQ(element_mult_order(F9.ext(), F9.ext().one()), 1u);
    u64 generators = 0;
    for (const auto& x : all_elements(F9)) {
        if (F9.ext().is_zero(x)) continue;
        u64 k = 1;
        auto y = x;
        while (y != F9.ext().one()) {
            y = F9.ext().mul(y, x);
            ++k;
        }
        ASSERT_EQ(element_mult_order(F9.ext(), x), k);
        if (k == 8) ++generators;
    }
    EXPECT_EQ(generators, oracle::phi(8));
    EXPECT_EQ(kind_of([&] { element_mult_order(F9.ext(), F9.ext().zero()); }), ErrorKind::DivisionByZero);
}
