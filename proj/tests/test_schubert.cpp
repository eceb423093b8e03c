#include <gtest/gtest.h>

#include <set>

#include "schubcone/decomp.hpp"
#include "schubcone/errors.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/io.hpp"
#include "schubcone/schubert.hpp"
#include "schubcone/signed_perm.hpp"

using namespace schubcone;

namespace {

WeylGroup group(const char* t) { return WeylGroup(RootSystemSpec::parse(t)); }

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

std::set<Root> eps(const RootSystem& rs, std::initializer_list<const char*> v) {
    std::set<Root> out;
    for (auto s : v) out.insert(rs.parse_root(s));
    return out;
}

}  // namespace

TEST(Schubert, AmbientWeights) {
    auto G = group("A2");
    const auto& rs = G.roots();
    std::set<Root> neg, pos(rs.positive_roots().begin(), rs.positive_roots().end());
    for (const auto& r : rs.positive_roots()) neg.insert(-r);
    EXPECT_EQ(as_set(ambient_weights(G, G.identity(), {})), neg);
    EXPECT_EQ(as_set(ambient_weights(G, G.longest_element(), {})), pos);
    std::set<Root> inv;
    for (const auto& r : ambient_weights(G, G.from_word({1, 2}), {}))
        if (r.is_positive()) inv.insert(r);
    EXPECT_EQ(inv, (std::set<Root>{{1, 0}, {1, 1}}));
}

TEST(Schubert, CurveWeightSplit) {
    for (const char* t : {"A3", "B3"}) {
        auto G = group(t);
        for (const auto& x : G.elements()) {
            auto T = inversion_table(G, G.lexmin_reduced_word(x));
            for (const auto& w : G.elements()) {
                if (!G.bruhat_leq(w, x)) continue;
                auto cur = curve_weights(G, x, w, {});
                EXPECT_EQ(as_set(cur), as_set(curve_weights(G, x, w, {})));
                if (w == G.identity()) EXPECT_EQ(as_set(cur), as_set(ambient_weights(G, x, {})));
                std::set<Root> pos;
                int neg = 0;
                for (const auto& r : cur) {
                    if (r.is_positive()) pos.insert(r);
                    else ++neg;
                }
                EXPECT_EQ(neg, G.roots().num_positive() - G.length(x));
                auto kl = kl_curve_weights(G, T, w);
                EXPECT_EQ(pos, as_set(kl));
                EXPECT_GE(static_cast<int>(kl.size()), G.length(x) - G.length(w));
                auto up = as_set(kl_demazure_upper(G, T, w));
                for (const auto& r : kl) EXPECT_TRUE(up.count(r));
            }
        }
    }
    EXPECT_THROW(curve_weights(group("A2"), group("A2").simple(1), group("A2").simple(2), {}), Error);
}

TEST(Schubert, KlWeightsA2) {
    auto G = group("A2");
    auto T = inversion_table(G, {1, 2, 1});
    EXPECT_EQ(as_set(kl_curve_weights(G, T, G.simple(1))), (std::set<Root>{{1, 0}, {0, 1}}));
    EXPECT_EQ(kl_demazure_upper(G, T, G.simple(1)).size(), 3u);
}

TEST(Schubert, TwoRootB2) {
    auto G = group("B2");
    const auto& w0 = G.longest_element();
    // alpha = alpha2 (short), beta = alpha1 (long)
    auto w = G.multiply(w0, G.from_word({2, 1, 2}));
    EXPECT_EQ(as_set(curve_weights(G, w0, w, {})), (std::set<Root>{{0, 1}, {1, 0}, {1, 2}}));
    auto t = tangent_weights(G, w0, w, {});
    ASSERT_TRUE(t.roots);
    EXPECT_EQ(t.provenance, "bc2-rank2");
    EXPECT_EQ(as_set(*t.roots), (std::set<Root>{{0, 1}, {1, 0}, {1, 1}, {1, 2}}));
    auto R = weight_report(G, w0, w, {});
    EXPECT_EQ(R.dim_x, 3);
    EXPECT_TRUE(R.rationally_smooth);
    ASSERT_TRUE(R.smooth);
    EXPECT_FALSE(*R.smooth);
}

TEST(Schubert, TypeATangentIsCurve) {
    auto G = group("A3");
    for (const auto& x : G.elements())
        for (const auto& w : G.elements()) {
            if (!G.bruhat_leq(w, x)) continue;
            auto t = tangent_weights(G, x, w, {});
            ASSERT_TRUE(t.roots);
            EXPECT_EQ(t.provenance, "typeA");
            EXPECT_EQ(as_set(*t.roots), as_set(curve_weights(G, x, w, {})));
        }
}

TEST(Schubert, TypeDOtherWeights) {
    auto G = group("D4");
    const auto& rs = G.roots();
    EXPECT_EQ(to_signed_permutation(G, u_ab(G, 1, 2)), (SignedPermutation{-1, -3, -2, -4}));
    // u_ab as the product of the three reflections
    auto r = [&](const char* s) { return G.reflection(rs.parse_root(s)); };
    EXPECT_EQ(u_ab(G, 1, 2), G.multiply(r("e1-e4"), G.multiply(r("e1+e4"), r("e2+e3"))));
    const auto& w0 = G.longest_element();
    auto w = G.multiply(u_ab(G, 1, 2), w0);
    EXPECT_EQ(as_set(phi_oth_typeD(G, w)), eps(rs, {"e1+e2"}));
    EXPECT_TRUE(phi_oth_typeD(G, G.identity()).empty());
    auto t = tangent_weights(G, w0, w, {});
    ASSERT_TRUE(t.roots);
    EXPECT_EQ(t.provenance, "lakshmibai-D-w0");
    auto want = as_set(curve_weights(G, w0, w, {}));
    want.insert(rs.parse_root("e1+e2"));
    EXPECT_EQ(as_set(*t.roots), want);

    auto D5 = group("D5");
    auto w5 = D5.multiply(u_ab(D5, 1, 2), D5.longest_element());
    EXPECT_EQ(as_set(phi_oth_typeD(D5, w5)), eps(D5.roots(), {"e1+e2", "e1+e3", "e2+e3"}));
    EXPECT_THROW(u_ab(D5, 2, 1), Error);
    EXPECT_THROW(u_ab(group("B3"), 1, 2), Error);
}

TEST(Schubert, Predicates) {
    auto D4 = group("D4");
    auto stem = D4.from_word({2, 1, 3, 4, 2});
    EXPECT_FALSE(is_cominuscule_elt(D4, stem));
    EXPECT_TRUE(is_cominuscule_elt(D4, D4.identity()));
    auto A3 = group("A3");
    for (int i = 1; i <= 3; ++i) {
        Levi J;
        for (int j = 1; j <= 3; ++j)
            if (j != i) J.push_back(j);
        EXPECT_TRUE(is_cominuscule_parabolic(A3.roots(), J));
    }
    EXPECT_FALSE(is_cominuscule_parabolic(D4.roots(), {1, 3, 4}));  // node 2 has coefficient 2
    EXPECT_TRUE(is_cominuscule_parabolic(D4.roots(), {2, 3, 4}));
    auto c = coplanarity(A3.roots(), inversion_set(A3, A3.from_word({1, 2})));
    EXPECT_TRUE(c.coplanar);
    EXPECT_EQ(c.sign, -1);
    EXPECT_TRUE(has_sum_triple(A3.roots(), A3.roots().positive_roots()));
    EXPECT_FALSE(comin_char_condition(group("B2"), group("B2").identity(), {}));
}

TEST(Schubert, ReportTrivialCase) {
    auto G = group("A3");
    auto x = G.from_word({1, 2, 3, 1});
    auto R = weight_report(G, x, x, {});
    EXPECT_EQ(R.dim_y, 0);
    EXPECT_EQ(R.reduced_subexpressions, 1);
    ASSERT_TRUE(R.smooth);
    EXPECT_TRUE(*R.smooth);
}

TEST(Schubert, SmoothMatchesCountInTypeA) {
    auto G = group("A3");
    for (const auto& x : G.elements())
        for (const auto& w : G.elements()) {
            if (!G.bruhat_leq(w, x)) continue;
            auto R = weight_report(G, x, w, {});
            if (R.subexpression_criterion.empty()) continue;
            EXPECT_EQ(*R.smooth, R.reduced_subexpressions == 1);
        }
}

TEST(Schubert, ParabolicDimensions) {
    auto G = group("A3");
    Levi J{1, 3};
    for (const auto& x : G.minimal_reps(J))
        for (const auto& w : G.minimal_reps(J)) {
            if (!G.bruhat_leq(w, x)) continue;
            auto R = weight_report(G, x, w, J);
            EXPECT_EQ(R.dim_x, 4 - G.length(w));
            EXPECT_GE(static_cast<int>(R.phi_cur.size()), R.dim_x);
        }
    EXPECT_THROW(weight_report(G, G.simple(1), G.identity(), J), Error);
}

TEST(Schubert, CharacterA2) {
    auto G = group("A2");
    auto T = inversion_table(G, {1, 2, 1});
    auto ch = kl_character_truncated(G, T, G.simple(1), 0);
    ASSERT_EQ(ch.size(), 1u);
    EXPECT_EQ(ch.begin()->second, 1);
    auto full = kl_character_truncated(G, T, T.x, 3);
    ASSERT_EQ(full.size(), 1u);
    EXPECT_EQ(full.begin()->first, (Root{0, 0}));
}

TEST(Schubert, OppositeTranslate) {
    for (const char* t : {"A3", "B3", "D4"}) {
        auto G = group(t);
        const auto& w0 = G.longest_element();
        EXPECT_EQ(opposite_translate(G, w0), G.identity());
        EXPECT_EQ(opposite_translate(G, G.identity()), w0);
        for (const auto& w : G.elements()) EXPECT_EQ(opposite_translate(G, opposite_translate(G, w)), w);
    }
}

TEST(Serialization, RoundTrip) {
    for (const char* t : {"B3", "D4", "G2"}) {
        auto G = group(t);
        const auto& rs = G.roots();
        for (const auto& r : rs.all_roots()) {
            auto j = json::parse(root_json(rs, r).dump());
            EXPECT_EQ(root_from_json(rs, j), r);
            if (j.contains("eps")) EXPECT_EQ(rs.parse_root(j["eps"].get<std::string>()), r);
        }
        for (const auto& w : G.elements()) EXPECT_EQ(elt_from_json(G, json::parse(elt_json(G, w).dump())), w);
    }
    auto G = group("D4");
    auto w = G.multiply(u_ab(G, 1, 2), G.longest_element());
    auto R = weight_report(G, G.longest_element(), w, {});
    auto j = json::parse(weight_report_json(G, R).dump());
    EXPECT_EQ(elt_from_json(G, j["w"]), w);
    std::set<Root> tan;
    for (const auto& r : j["phi_tan"]) tan.insert(root_from_json(G.roots(), r));
    EXPECT_EQ(tan, as_set(*R.phi_tan));
    EXPECT_EQ(j["provenance"], "lakshmibai-D-w0");
    auto c = cone_member_rational(Root{1, 0}, {Root{1, 0}});
    auto cj = certificate_json(group("A2").roots(), *c.decomposition);
    EXPECT_EQ(parse_rational(cj["terms"][0]["coefficient"].get<std::string>()), 1);
}

TEST(Serialization, Rationals) {
    EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
    EXPECT_EQ(to_string(Rational(6, 3)), "2");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
}
