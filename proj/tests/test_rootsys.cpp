#include <gtest/gtest.h>

#include <set>

#include "schubcone/errors.hpp"
#include "schubcone/rootsys.hpp"

using namespace schubcone;

namespace {

RootSystem rs(const char* t) { return RootSystem(RootSystemSpec::parse(t)); }

}  // namespace

TEST(RootSystem, RejectsInadmissibleTypes) {
    for (const char* t : {"D3", "B1", "C1", "E5", "E9", "F3", "G3", "A0", "H3", "", "A"})
        EXPECT_THROW(RootSystemSpec::parse(t), Error) << t;
    EXPECT_NO_THROW(RootSystemSpec::parse("b3"));
    EXPECT_NO_THROW(RootSystemSpec::parse("A1"));
}

TEST(RootSystem, PositiveRootCounts) {
    // closure under reflections vs the textbook counts
    const std::vector<std::pair<const char*, int>> counts{{"A1", 1}, {"A2", 3}, {"A4", 10}, {"B2", 4}, {"B3", 9},
                                                          {"C3", 9}, {"D4", 12}, {"D5", 20}, {"G2", 6}, {"F4", 24},
                                                          {"E6", 36}, {"E7", 63}, {"E8", 120}};
    for (auto [t, n] : counts) {
        auto R = rs(t);
        EXPECT_EQ(R.num_positive(), n) << t;
        EXPECT_EQ(static_cast<std::size_t>(n), expected_positive_count(R.spec())) << t;
    }
}

TEST(RootSystem, A2Basics) {
    auto R = rs("A2");
    std::set<Root> pos(R.positive_roots().begin(), R.positive_roots().end());
    EXPECT_EQ(pos, (std::set<Root>{{1, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(R.inner(Root{1, 0}, Root{0, 1}) * 2, -R.norm_sq(Root{1, 0}));
    EXPECT_EQ(R.norm_sq(Root{1, 0}), R.norm_sq(Root{0, 1}));
    EXPECT_EQ(R.reflect(Root{1, 0}, Root{0, 1}), (Root{1, 1}));
    EXPECT_EQ(height(Root{1, 1}), 2);
    EXPECT_EQ(R.highest_root(), (Root{1, 1}));
}

TEST(RootSystem, B2Conventions) {
    auto R = rs("B2");
    // alpha1 long, alpha2 short
    EXPECT_EQ(R.norm_sq(Root{1, 0}), 2 * R.norm_sq(Root{0, 1}));
    EXPECT_EQ(R.coroot_pairing(Root{1, 0}, Root{0, 1}), Rational(-2));
    EXPECT_EQ(R.coroot_pairing(Root{0, 1}, Root{1, 0}), Rational(-1));
    // s_a(b) = a+b and s_a s_b(a) = a+2b with a = alpha1, b = alpha2
    Root a{1, 0}, b{0, 1};
    EXPECT_EQ(R.reflect(a, b), a + b);
    EXPECT_EQ(R.reflect(a, R.reflect(b, a)), a + 2 * b);
    EXPECT_EQ(height(a + 2 * b), 3);
    std::set<std::string> eps;
    for (const auto& r : R.positive_roots()) eps.insert(R.epsilon_string(r));
    EXPECT_EQ(eps, (std::set<std::string>{"e1", "e2", "e1-e2", "e1+e2"}));
}

TEST(RootSystem, ReflectionIsInvolutionAndIsometry) {
    for (const char* t : {"B3", "C3", "G2", "F4", "D4"}) {
        auto R = rs(t);
        for (const auto& m : R.all_roots())
            for (const auto& v : R.all_roots()) {
                Root r = R.reflect(m, v);
                EXPECT_TRUE(R.is_root(r));
                EXPECT_EQ(R.reflect(m, r), v);
                EXPECT_EQ(R.norm_sq(r), R.norm_sq(v));
            }
        for (const auto& a : R.all_roots()) {
            EXPECT_EQ(R.coroot_pairing(a, a), Rational(2));
            EXPECT_EQ(R.reflect(a, a), -a);
        }
    }
    EXPECT_THROW(rs("A2").reflect(Root{0, 0}, Root{1, 0}), Error);
}

TEST(RootSystem, CartanEntriesFromRoots) {
    // a[i][j] = <alpha_j, alpha_i^vee> recomputed from the Gram matrix
    for (const char* t : {"B3", "C4", "F4", "G2", "E6"}) {
        auto R = rs(t);
        for (int i = 0; i < R.rank(); ++i)
            for (int j = 0; j < R.rank(); ++j)
                EXPECT_EQ(Rational(R.cartan()[i][j]), R.coroot_pairing(R.simple_root(j), R.simple_root(i))) << t;
    }
}

TEST(RootSystem, EpsilonRoundTrip) {
    for (const char* t : {"A3", "B3", "C3", "D4"}) {
        auto R = rs(t);
        for (const auto& r : R.all_roots()) {
            EXPECT_EQ(R.from_epsilon(R.to_epsilon(r)), r);
            EXPECT_EQ(R.parse_root(R.epsilon_string(r)), r);
            EXPECT_EQ(R.parse_root(R.format(r)), r);
        }
    }
    EXPECT_THROW(rs("A2").parse_root("[1,2,3]"), Error);
    EXPECT_THROW(rs("A2").parse_root("[1,x]"), Error);
}

TEST(RootSystem, HeightPositiveOnPositives) {
    for (const char* t : {"E7", "F4"}) {
        auto R = rs(t);
        for (const auto& r : R.positive_roots()) EXPECT_GT(height(r), 0);
    }
}
