#include "schubcone/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "schubcone/errors.hpp"

namespace schubcone {

namespace {

int perm_size(const WeylGroup& G) {
    const auto& rs = G.roots();
    if (!rs.is_classical()) throw Error(rs.name() + ": signed permutations need a classical type");
    return rs.epsilon_dim();
}

// image of the signed letter x under s_i
int act_simple(char fam, int n, int i, int x) {
    int a = std::abs(x), s = x < 0 ? -1 : 1;
    bool last = fam != 'A' && i == n;
    if (!last) {
        if (a == i) return s * (i + 1);
        if (a == i + 1) return s * i;
        return x;
    }
    if (fam == 'D') {
        if (a == n - 1) return -s * n;
        if (a == n) return -s * (n - 1);
        return x;
    }
    return a == n ? -x : x;  // B, C
}

void check_signed(const SignedPermutation& u, int n, char fam) {
    if (static_cast<int>(u.size()) != n)
        throw Error("signed permutation needs " + std::to_string(n) + " entries, got " + std::to_string(u.size()));
    std::vector<char> seen(n + 1, 0);
    int neg = 0;
    for (int x : u) {
        int a = std::abs(x);
        if (x == 0 || a > n || seen[a]) throw Error("'" + format_signed_permutation(u) + "' is not a signed permutation of 1.." + std::to_string(n));
        seen[a] = 1;
        neg += x < 0;
    }
    if (fam == 'A' && neg) throw Error("type A elements are unsigned permutations");
    if (fam == 'D' && neg % 2) throw Error("type D needs an even number of negative entries");
}

}  // namespace

SignedPermutation parse_signed_permutation(const std::string& text) {
    std::string t;
    for (char c : text) t += (c == ',' || c == '[' || c == ']') ? ' ' : c;
    std::stringstream ss(t);
    std::string item;
    SignedPermutation u;
    while (ss >> item) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (...) {
            throw Error("signed permutation: bad entry '" + item + "'");
        }
        if (used != item.size() || v == 0) throw Error("signed permutation: bad entry '" + item + "'");
        u.push_back(v);
    }
    return u;
}

std::string format_signed_permutation(const SignedPermutation& u) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(u[i]);
    }
    return s;
}

SignedPermutation to_signed_permutation(const WeylGroup& G, const WeylElt& w) {
    const int n = perm_size(G);
    const char fam = G.roots().spec().family;
    const int r = G.rank();
    // w = s_{q1} ... s_{qk}; u(i) = s_{q1}(... s_{qk}(i))
    Word q = G.lexmin_reduced_word(w);
    SignedPermutation u(n);
    for (int i = 1; i <= n; ++i) {
        int x = i;
        for (auto it = q.rbegin(); it != q.rend(); ++it) x = act_simple(fam, r, *it, x);
        u[i - 1] = x;
    }
    return u;
}

WeylElt from_signed_permutation(const WeylGroup& G, const SignedPermutation& u) {
    const int n = perm_size(G);
    const auto& rs = G.roots();
    check_signed(u, n, rs.spec().family);
    std::vector<Root> images;
    for (int i = 0; i < G.rank(); ++i) {
        auto e = rs.to_epsilon(rs.simple_root(i));
        std::vector<int> img(n, 0);
        for (int k = 0; k < n; ++k) {
            if (e[k] == 0) continue;
            int t = u[k];
            img[std::abs(t) - 1] += (t < 0 ? -1 : 1) * e[k];
        }
        images.push_back(rs.from_epsilon(img));
    }
    return G.from_simple_images(images);
}

bool permutation_rank_leq(const std::vector<int>& u, const std::vector<int>& v) {
    // u <= v iff #{k <= a : u(k) >= b} <= same for v, for all a, b
    const int n = static_cast<int>(u.size());
    for (int b = 1; b <= n; ++b) {
        int cu = 0, cv = 0;
        for (int a = 0; a < n; ++a) {
            cu += u[a] >= b;
            cv += v[a] >= b;
            if (cu > cv) return false;
        }
    }
    return true;
}

bool signed_rank_leq(const SignedPermutation& u, const SignedPermutation& v) {
    // embed into permutations of the 2n letters ordered 1<..<n<-n<..<-1
    const int n = static_cast<int>(u.size());
    auto rank_of = [n](int x) { return x > 0 ? x : 2 * n + 1 + x; };
    auto embed = [&](const SignedPermutation& s) {
        std::vector<int> p(2 * n);
        for (int i = 1; i <= n; ++i) {
            p[rank_of(i) - 1] = rank_of(s[i - 1]);
            p[rank_of(-i) - 1] = rank_of(-s[i - 1]);
        }
        return p;
    };
    return permutation_rank_leq(embed(u), embed(v));
}

bool proctor_leq(const WeylGroup& G, const SignedPermutation& u, const SignedPermutation& v) {
    const char fam = G.roots().spec().family;
    if (fam == 'A') return permutation_rank_leq(u, v);
    if (fam == 'B' || fam == 'C') return signed_rank_leq(u, v);
    throw Error("the tableau criterion is implemented for types A, B, C only");
}

}  // namespace schubcone
