#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "schubcone/errors.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/signed_perm.hpp"
#include "schubcone/weyl.hpp"

using namespace schubcone;

namespace {

WeylGroup group(const char* t) { return WeylGroup(RootSystemSpec::parse(t)); }

// u <= w iff some subword of a reduced word of w is a word for u
std::set<WeylElt> subword_products(const WeylGroup& G, const Word& q) {
    std::set<WeylElt> out;
    const int l = static_cast<int>(q.size());
    for (int m = 0; m < (1 << l); ++m) {
        Word s;
        for (int i = 0; i < l; ++i)
            if (m >> i & 1) s.push_back(q[i]);
        out.insert(G.from_word(s));
    }
    return out;
}

// every reduced word, by stripping right descents
std::vector<Word> all_reduced_words(const WeylGroup& G, const WeylElt& w) {
    if (G.length(w) == 0) return {Word{}};
    std::vector<Word> out;
    for (int i : G.right_descents(w))
        for (auto q : all_reduced_words(G, G.times_simple(w, i))) {
            q.push_back(i);
            out.push_back(q);
        }
    return out;
}

bool has_braid(const WeylGroup& G, const Word& q) {
    for (std::size_t a = 0; a < q.size(); ++a) {
        if (a + 1 >= q.size() || q[a] == q[a + 1]) continue;
        int m = G.coxeter_m(q[a], q[a + 1]);
        if (m < 3 || a + m > q.size()) continue;
        bool alt = true;
        for (int k = 0; k < m; ++k) alt = alt && q[a + k] == (k % 2 ? q[a + 1] : q[a]);
        if (alt) return true;
    }
    return false;
}

}  // namespace

TEST(Weyl, Words) {
    EXPECT_EQ(parse_word("1,2,1"), (Word{1, 2, 1}));
    EXPECT_EQ(parse_word("1 2 1"), (Word{1, 2, 1}));
    EXPECT_TRUE(parse_word("").empty());
    EXPECT_TRUE(parse_word("e").empty());
    EXPECT_EQ(format_word({1, 2}), "1,2");
    EXPECT_EQ(display_word({}), "e");
    auto G = group("A2");
    EXPECT_THROW(G.from_word({3}), Error);
    EXPECT_THROW(G.from_word({0}), Error);
}

TEST(Weyl, A2Elements) {
    auto G = group("A2");
    EXPECT_EQ(G.from_word({}), G.identity());
    EXPECT_EQ(G.from_word({1, 2, 1}), G.from_word({2, 1, 2}));
    EXPECT_EQ(G.from_word({1, 1}), G.identity());
    auto w0 = G.longest_element();
    EXPECT_EQ(G.length(w0), 3);
    EXPECT_EQ(G.right_descents(w0), (std::vector<int>{1, 2}));
    EXPECT_EQ(G.lexmin_reduced_word(w0), (Word{1, 2, 1}));
    EXPECT_EQ(G.lexmin_reduced_word(G.identity()), Word{});
    EXPECT_EQ(G.count_reduced_words(w0), 2);
    EXPECT_EQ(G.commutation_class_size({1, 2, 1}), 1u);
    EXPECT_TRUE(G.bruhat_leq(G.simple(1), G.from_word({2, 1})));
    EXPECT_FALSE(G.bruhat_leq(G.from_word({1, 2}), G.from_word({2, 1})));
}

TEST(Weyl, GroupOrders) {
    const std::vector<std::pair<const char*, int>> orders{{"A3", 24}, {"B3", 48}, {"C3", 48}, {"D4", 192}, {"G2", 12}, {"A4", 120}};
    for (auto [t, n] : orders) {
        auto G = group(t);
        EXPECT_EQ(G.order(), n) << t;
        EXPECT_EQ(static_cast<int>(G.elements().size()), n) << t;
    }
    EXPECT_EQ(group("F4").order(), 1152);
    EXPECT_EQ(group("E8").order(), 696729600);
}

TEST(Weyl, GuardRejectsLargeEnumeration) {
    auto G = group("E8");
    EXPECT_THROW(G.elements(), GuardExceeded);
    EXPECT_THROW(group("D4").elements(100), GuardExceeded);
}

TEST(Weyl, ActionAndInverse) {
    auto G = group("B3");
    for (const auto& w : G.elements()) {
        auto wi = G.inverse(w);
        EXPECT_EQ(G.multiply(w, wi), G.identity());
        for (const auto& r : G.roots().all_roots()) EXPECT_EQ(G.apply(wi, G.apply(w, r)), r);
        EXPECT_EQ(G.length(w), G.length(wi));
        EXPECT_TRUE(G.is_reduced(G.lexmin_reduced_word(w)));
        EXPECT_EQ(G.from_simple_images(G.simple_images(w)), w);
    }
}

TEST(Weyl, BruhatAgreesWithSubwordOracle) {
    for (const char* t : {"A3", "B3", "G2"}) {
        auto G = group(t);
        auto all = G.elements();
        for (const auto& w : all) {
            auto below = subword_products(G, G.lexmin_reduced_word(w));
            for (const auto& u : all) EXPECT_EQ(G.bruhat_leq(u, w), below.count(u) == 1) << t;
        }
    }
}

TEST(Weyl, ProctorAgreesWithBruhat) {
    for (const char* t : {"A3", "B3", "C3"}) {
        auto G = group(t);
        auto all = G.elements();
        for (const auto& u : all)
            for (const auto& w : all)
                EXPECT_EQ(proctor_leq(G, to_signed_permutation(G, u), to_signed_permutation(G, w)), G.bruhat_leq(u, w)) << t;
    }
    // type D: the B rank condition is necessary only
    auto G = group("D4");
    auto all = G.elements();
    for (const auto& u : all)
        for (const auto& w : all)
            if (G.bruhat_leq(u, w)) EXPECT_TRUE(signed_rank_leq(to_signed_permutation(G, u), to_signed_permutation(G, w)));
    EXPECT_THROW(proctor_leq(G, {1, 2, 3, 4}, {1, 2, 3, 4}), Error);
}

TEST(Weyl, FullyCommutativeLiteral) {
    for (const char* t : {"A3", "B3", "D4"}) {
        auto G = group(t);
        for (const auto& w : G.elements()) {
            auto words = all_reduced_words(G, w);
            EXPECT_EQ(G.count_reduced_words(w), static_cast<long>(words.size()));
            bool fc = true;
            for (const auto& q : words) fc = fc && !has_braid(G, q);
            EXPECT_EQ(G.is_fully_commutative(w), fc) << t << " " << G.format(w);
        }
    }
}

TEST(Weyl, StemElementD4) {
    auto G = group("D4");
    Word q{2, 1, 3, 4, 2};
    auto x = G.from_word(q);
    EXPECT_EQ(G.length(x), 5);
    EXPECT_TRUE(G.is_fully_commutative(x));
    EXPECT_EQ(G.commutation_class_size(q), G.count_reduced_words(x).get_ui());
    EXPECT_THROW(G.commutation_class_size({1, 1}), Error);
}

TEST(Weyl, LongestAndParabolic) {
    auto B2 = group("B2");
    for (const auto& r : B2.roots().all_roots()) EXPECT_EQ(B2.apply(B2.longest_element(), r), -r);
    for (const char* t : {"A3", "B3", "D4"}) {
        auto G = group(t);
        EXPECT_EQ(G.length(G.longest_element()), G.roots().num_positive());
        for (int i = 1; i <= G.rank(); ++i) {
            std::vector<int> J;
            for (int j = 1; j <= G.rank(); ++j)
                if (j != i) J.push_back(j);
            EXPECT_TRUE(G.is_minimal_rep(G.identity(), J));
            // |W^J| |W_J| = |W|, with |W_J| = number of elements below w0_J
            auto wJ = G.longest_parabolic(J);
            int levi = 0;
            for (const auto& u : G.elements()) levi += G.bruhat_leq(u, wJ);
            EXPECT_EQ(G.minimal_reps(J).size() * levi, G.elements().size());
        }
    }
}

TEST(Weyl, SignedPermutations) {
    auto G = group("D4");
    EXPECT_EQ(to_signed_permutation(G, G.identity()), (SignedPermutation{1, 2, 3, 4}));
    for (const auto& w : G.elements()) EXPECT_EQ(from_signed_permutation(G, to_signed_permutation(G, w)), w);
    EXPECT_THROW(from_signed_permutation(G, {-1, 2, 3, 4}), Error);
    EXPECT_EQ(parse_signed_permutation("-1 -3 -2 -4"), (SignedPermutation{-1, -3, -2, -4}));
    EXPECT_EQ(format_signed_permutation({-1, 2}), "-1 2");

    auto A = group("A3");
    // reflection in e1 - e3 swaps positions 1 and 3
    const auto& r = A.reflection(A.roots().parse_root("e1-e3"));
    EXPECT_EQ(to_signed_permutation(A, r), (SignedPermutation{3, 2, 1, 4}));
}
