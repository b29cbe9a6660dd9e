#include <gtest/gtest.h>

#include <random>

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

// Semisimple pairs with |G| <= 1000 for the exhaustive checks.
std::vector<std::pair<u64, AbelianGroup>> small_groups() {
    return {{13, AbelianGroup({119})}, {25, AbelianGroup({176})}, {2, AbelianGroup({3, 9})},
            {5, AbelianGroup({4, 12})},           {7, AbelianGroup({10, 10})}, {3, AbelianGroup({8, 10})},
            {4, AbelianGroup({3, 5, 7})},         {25, AbelianGroup({11, 11})}, {9, AbelianGroup({2, 4, 8})},
            {11, AbelianGroup({3, 7, 13})},       {16, AbelianGroup({255})},   {49, AbelianGroup({4, 5, 6})}};
}

}  // namespace

TEST(PrimePowerQ, Parsing) {
    auto q = PrimePowerQ::from(15625);
    EXPECT_EQ(q.p, 5u);
    EXPECT_EQ(q.alpha, 6u);
    EXPECT_EQ(PrimePowerQ::from(5, 6).q, 15625u);
    EXPECT_EQ(kind_of([] { PrimePowerQ::from(12); }), ErrorKind::InvalidField);
    EXPECT_EQ(kind_of([] { PrimePowerQ::from(1); }), ErrorKind::InvalidField);
    EXPECT_EQ(kind_of([] { PrimePowerQ::from(6, 2); }), ErrorKind::InvalidField);
}

TEST(TOf, Examples) {
    const AbelianGroup C2669({2669});
    EXPECT_EQ(t_of(13, C2669, GroupElement{{157}}), 4u);
    EXPECT_EQ(t_of(13, C2669, C2669.identity()), 1u);
    const AbelianGroup C176({176});
    EXPECT_EQ(t_of(25, C176, GroupElement{{11}}), 2u);
}

TEST(TOf, NotSemisimple) {
    const AbelianGroup C10({10});
    EXPECT_EQ(kind_of([&] { t_of(25, C10, GroupElement{{1}}); }), ErrorKind::NotSemisimple);
    EXPECT_EQ(kind_of([&] { orbit_partition(2, C10); }), ErrorKind::NotSemisimple);
    EXPECT_EQ(kind_of([&] { global_l(5, C10); }), ErrorKind::NotSemisimple);
}

TEST(QOrbit, Examples) {
    const AbelianGroup C3({3});
    auto o = q_orbit(2, C3, GroupElement{{1}});
    EXPECT_EQ(o.size, 2u);
    EXPECT_EQ(o.member_ranks, (std::vector<u64>{1, 2}));
    EXPECT_EQ(q_orbit(2, C3, C3.identity()).size, 1u);
    const AbelianGroup C2669({2669});
    EXPECT_EQ(q_orbit(13, C2669, GroupElement{{1}}).size, 12u);
}

TEST(QOrbit, MembersShareOrder) {
    const AbelianGroup G({4, 12});
    for (const auto& g : enumerate_elements(G)) {
        auto o = q_orbit(5, G, g);
        for (u64 r : o.member_ranks) ASSERT_EQ(element_order(G, G.element_at(r)), o.element_order);
        ASSERT_EQ(std::set<u64>(o.member_ranks.begin(), o.member_ranks.end()).size(), o.size);
    }
}

TEST(OrbitPartition, Examples) {
    EXPECT_EQ(orbit_partition(3, AbelianGroup({4})).sizes(), (std::vector<u64>{1, 1, 2}));
    EXPECT_EQ(orbit_partition(2, AbelianGroup({3})).sizes(), (std::vector<u64>{1, 2}));
    auto p = orbit_partition(25, AbelianGroup({11, 11}));
    EXPECT_EQ(p.histogram(), (std::map<u64, u64>{{1, 1}, {5, 24}}));
    EXPECT_EQ(p.l, 5u);
}

TEST(OrbitPartition, OrderingAndRepresentatives) {
    const AbelianGroup G({3, 9});
    const auto part = orbit_partition(2, G);
    for (std::size_t i = 0; i < part.orbits.size(); ++i) {
        const auto& o = part.orbits[i];
        const u64 rep = G.rank(o.representative);
        EXPECT_EQ(rep, *std::min_element(o.member_ranks.begin(), o.member_ranks.end()));
        if (i) {
            const auto& prev = part.orbits[i - 1];
            EXPECT_TRUE(prev.size < o.size || (prev.size == o.size && G.rank(prev.representative) < rep));
        }
    }
}

TEST(OrbitPartition, MatchesOrbitWalkOracle) {
    std::mt19937_64 eng(17);
    const std::vector<u64> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49};
    int tested = 0;
    while (tested < 150) {
        const u64 q = qs[eng() % qs.size()];
        const AbelianGroup G(oracle::random_factors(eng, 30, 600));
        if (!is_semisimple(q, G)) continue;
        const auto part = orbit_partition(q, G);
        ASSERT_EQ(part.sizes(), oracle::orbit_sizes(q, G)) << q << " " << G.spec();
        u64 total = 0, l = 1;
        for (u64 s : part.sizes()) {
            total += s;
            l = std::lcm(l, s);
        }
        ASSERT_EQ(total, G.order());
        ASSERT_EQ(part.l, l);
        ASSERT_EQ(global_l(q, G), l);
        ++tested;
    }
}

TEST(GlobalL, Examples) {
    EXPECT_EQ(global_l(13, AbelianGroup({2669})), 12u);
    EXPECT_EQ(global_l(25, AbelianGroup({176})), 10u);
    EXPECT_EQ(global_l(3, AbelianGroup({2, 2, 2})), 1u);
}

TEST(SplittingDegree, Examples) {
    const AbelianGroup G1({2, 16, 9, 3});
    auto ev = is_splitting_degree(15625, G1, 4);
    EXPECT_TRUE(ev.value());
    EXPECT_TRUE(ev.exponent_divides_q_pow_t_minus_1);
    const AbelianGroup C176({176});
    EXPECT_TRUE(is_splitting_degree(25, C176, global_l(25, C176)).value());
    auto no = is_splitting_degree(25, C176, 3);
    EXPECT_FALSE(no.value());
    EXPECT_FALSE(no.exponent_divides_q_pow_t_minus_1);
    EXPECT_EQ(no.q_pow_t_mod_exponent, 15625u % 176);
    EXPECT_EQ(kind_of([&] { is_splitting_degree(25, C176, 0); }), ErrorKind::InvalidRequest);
}

TEST(SplittingDegree, PredicatesAgreeForTUpTo30) {
    for (const auto& [q, G] : small_groups()) {
        u64 l = 1;
        for (u64 s : oracle::orbit_sizes(q, G)) l = std::lcm(l, s);
        for (u64 t = 1; t <= 30; ++t) {
            auto ev = is_splitting_degree(q, G, t);
            ASSERT_EQ(ev.value(), t % l == 0);
            ASSERT_EQ(ev.exponent_divides_q_pow_t_minus_1, t % l == 0);
        }
    }
}

TEST(MinimalSplittingDegree, Examples) {
    EXPECT_EQ(minimal_splitting_degree(25, AbelianGroup({176})), 10u);
    EXPECT_EQ(minimal_splitting_degree(13, AbelianGroup({2669})), 12u);
    EXPECT_EQ(minimal_splitting_degree(13, AbelianGroup({2, 3, 4})), 1u);  // exp 12 | 13 - 1
}

// Periodicity, lcm and divisibility properties of t_g, by exhaustion.
TEST(OrbitSizeProperties, ExhaustiveOnSmallGroups) {
    for (const auto& [q, G] : small_groups()) {
        ASSERT_TRUE(is_semisimple(q, G)) << G.spec();
        std::vector<GroupElement> el(enumerate_elements(G).begin(), enumerate_elements(G).end());
        const u64 n = el.size(), l = global_l(q, G);
        std::vector<u64> t(n), o(n);
        for (u64 r = 0; r < n; ++r) {
            t[r] = t_of(q, G, el[r]);
            o[r] = element_order(G, el[r]);
            ASSERT_EQ(t[r], oracle::order_mod(q, o[r]));
            ASSERT_EQ(t[r], oracle::orbit(q, G, el[r]).size());
            ASSERT_LE(t[r], oracle::phi(o[r]));
        }
        for (u64 r = 0; r < n; ++r) {
            GroupElement h = el[r];
            for (u64 a = 1; a <= 3 * t[r]; ++a) {
                h = G.power(h, q);
                ASSERT_EQ(h == el[r], a % t[r] == 0);
            }
        }
        for (u64 a = 1; a <= 3 * l; ++a) {
            const u128 qa = arith::powmod(q, a, G.exponent());
            bool all = true;
            for (const auto& g : el) all = all && G.power(g, qa) == g;
            ASSERT_EQ(all, a % l == 0) << G.spec() << " a=" << a;
        }
        for (u64 i = 0; i < n; ++i)
            for (u64 j = 0; j < n; ++j) {
                const u64 k = G.rank(G.multiply(el[i], el[j]));
                const u64 L = std::lcm(t[i], t[j]);
                ASSERT_EQ(L % t[k], 0u);
                if (std::gcd(o[i], o[j]) == 1) {
                    ASSERT_EQ(t[k], L);
                    if (std::gcd(t[i], t[j]) == 1) ASSERT_EQ(t[k], t[i] * t[j]);
                }
                if (o[j] % o[i] == 0) ASSERT_EQ(t[j] % t[i], 0u);
            }
    }
}
