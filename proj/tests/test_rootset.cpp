#include <gtest/gtest.h>

#include <set>

#include "schubcone/errors.hpp"
#include "schubcone/rootset.hpp"

using namespace schubcone;

namespace {

WeylGroup group(const char* t) { return WeylGroup(RootSystemSpec::parse(t)); }

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(RootSet, InversionTableA2) {
    auto G = group("A2");
    auto T = inversion_table(G, {1, 2, 1});
    EXPECT_EQ(T.gammas, (std::vector<Root>{{1, 0}, {1, 1}, {0, 1}}));
    EXPECT_EQ(T.coxeters, (std::vector<WeylElt>{G.from_word({2, 1}), G.identity(), G.from_word({1, 2})}));
    EXPECT_EQ(T.demazures, (std::vector<WeylElt>{G.from_word({2, 1}), G.simple(1), G.from_word({1, 2})}));
    auto U = inversion_table(G, {2, 1, 2});
    EXPECT_EQ(U.gammas[1], (Root{1, 1}));
    EXPECT_EQ(U.demazures[1], G.simple(2));
    EXPECT_THROW(inversion_table(G, {1, 1}), Error);
}

TEST(RootSet, InversionTableB2) {
    auto G = group("B2");
    EXPECT_EQ(inversion_table(G, {1, 2, 1}).gammas, (std::vector<Root>{{1, 0}, {1, 1}, {1, 2}}));
}

TEST(RootSet, InversionSetDefinition) {
    for (const char* t : {"B3", "D4", "G2"}) {
        auto G = group(t);
        const auto& rs = G.roots();
        for (const auto& x : G.elements()) {
            std::set<Root> want;
            auto xi = G.inverse(x);
            for (const auto& a : rs.positive_roots())
                if (G.apply(xi, a).is_negative()) want.insert(a);
            auto T = inversion_table(G, G.lexmin_reduced_word(x));
            EXPECT_EQ(as_set(T.gammas), want);
            EXPECT_EQ(as_set(inversion_set(G, x)), want);
            for (int i = 0; i < T.size(); ++i) EXPECT_TRUE(G.bruhat_leq(T.coxeters[i], T.demazures[i]));
        }
    }
}

TEST(RootSet, Restrict) {
    auto G = group("A2");
    auto S = weighted_set(G, inversion_table(G, {1, 2, 1}));
    EXPECT_EQ(restrict_geq(G, S, WeightKind::coxeter, G.identity()).size(), 3);
    EXPECT_EQ(restrict_geq(G, S, WeightKind::coxeter, G.simple(1)).elements, (std::vector<Root>{{1, 0}, {0, 1}}));
    EXPECT_EQ(restrict_geq(G, S, WeightKind::demazure, G.simple(1)).size(), 3);
}

TEST(RootSet, Validation) {
    auto G = group("A2");
    const auto& rs = G.roots();
    EXPECT_NO_THROW(validate_root_set(rs, rs.positive_roots()));
    EXPECT_THROW(validate_root_set(rs, {Root{1, 0}, Root{-1, 0}}), Error);
    EXPECT_THROW(validate_root_set(rs, {Root{1, 0}, Root{0, 1}, Root{-1, -1}}), Error);
    EXPECT_THROW(validate_root_set(rs, {Root{1, 0}, Root{2, 0}}), Error);
    auto S = validate_root_set(rs, {Root{1, 0}, Root{0, -1}});
    for (const auto& a : S.elements) {
        Rational d = 0;
        for (int k = 0; k < a.size(); ++k) d += S.witness[k] * a[k];
        EXPECT_GT(d, 0);
    }
}

TEST(RootSet, Closedness) {
    auto G = group("B3");
    const auto& rs = G.roots();
    EXPECT_TRUE(is_closed(rs, rs.positive_roots()));
    for (const auto& x : G.elements()) EXPECT_TRUE(is_closed(rs, inversion_set(G, x)));
    EXPECT_FALSE(is_closed(group("A2").roots(), {Root{1, 0}, Root{0, 1}}));
    // closed subsets of A3 positive roots are exactly the 24 inversion sets
    auto A = group("A3");
    const auto& pos = A.roots().positive_roots();
    int closed = 0;
    for (int m = 0; m < (1 << pos.size()); ++m) {
        std::vector<Root> S;
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (m >> k & 1) S.push_back(pos[k]);
        closed += is_closed(A.roots(), S);
    }
    EXPECT_EQ(closed, 24);
}

TEST(RootSet, Helpers) {
    EXPECT_TRUE(proportional(Root{1, 2}, Root{2, 4}));
    EXPECT_FALSE(proportional(Root{1, 2}, Root{2, 3}));
    auto rs_ = solve_pair(Root{1, 1}, Root{1, 0}, Root{0, 1});
    ASSERT_TRUE(rs_);
    EXPECT_EQ(rs_->first, 1);
    EXPECT_EQ(rs_->second, 1);
}
