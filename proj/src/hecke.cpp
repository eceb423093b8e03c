#include "schubcone/hecke.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "schubcone/errors.hpp"

namespace schubcone {

WeylElt demazure_step(const WeylGroup& G, const WeylElt& u, int s) {
    return G.is_right_descent(u, s) ? u : G.times_simple(u, s);
}

WeylElt demazure_product(const WeylGroup& G, const Word& q) {
    G.from_word(q);  // validates letters
    WeylElt u = G.identity();
    for (int s : q) u = demazure_step(G, u, s);
    return u;
}

std::vector<WeylElt> subexpression_products(const WeylGroup& G, const Word& q) {
    G.from_word(q);
    std::unordered_set<WeylElt, WeylEltHash> reach{G.identity()};
    for (int s : q) {
        std::vector<WeylElt> add;
        for (const auto& u : reach) add.push_back(G.times_simple(u, s));
        for (auto& u : add) reach.insert(std::move(u));
    }
    std::vector<WeylElt> out(reach.begin(), reach.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool subexpression_exists(const WeylGroup& G, const Word& q, const WeylElt& u) {
    auto all = subexpression_products(G, q);
    return std::binary_search(all.begin(), all.end(), u);
}

BigInt count_reduced_subexpressions(const WeylGroup& G, const Word& q, const WeylElt& w) {
    G.from_word(q);
    std::unordered_map<WeylElt, BigInt, WeylEltHash> f{{G.identity(), BigInt(1)}};
    for (int s : q) {
        std::vector<std::pair<WeylElt, BigInt>> add;
        for (const auto& [u, c] : f)
            if (!G.is_right_descent(u, s)) add.emplace_back(G.times_simple(u, s), c);
        for (auto& [u, c] : add) f[u] += c;
    }
    auto it = f.find(w);
    return it == f.end() ? BigInt(0) : it->second;
}

std::vector<HeckeSubexpression> enumerate_hecke_subexpressions(const WeylGroup& G, const Word& q, const WeylElt& w) {
    G.from_word(q);
    const int L = static_cast<int>(q.size());
    const int lw = G.length(w);
    // feasible(p, u): letters p.. can carry the Demazure value u to w
    std::vector<std::unordered_map<WeylElt, bool, WeylEltHash>> memo(L + 1);
    std::function<bool(int, const WeylElt&)> feasible = [&](int p, const WeylElt& u) -> bool {
        if (!G.bruhat_leq(u, w)) return false;
        if (p == L) return u == w;
        auto it = memo[p].find(u);
        if (it != memo[p].end()) return it->second;
        bool ok = feasible(p + 1, u) || feasible(p + 1, demazure_step(G, u, q[p]));
        memo[p].emplace(u, ok);
        return ok;
    };
    std::vector<HeckeSubexpression> out;
    std::vector<int> chosen;
    std::function<void(int, const WeylElt&)> walk = [&](int p, const WeylElt& u) {
        if (p == L) {
            out.push_back({chosen, static_cast<int>(chosen.size()) - lw});
            return;
        }
        WeylElt v = demazure_step(G, u, q[p]);
        if (feasible(p + 1, v)) {
            chosen.push_back(p + 1);
            walk(p + 1, v);
            chosen.pop_back();
        }
        if (feasible(p + 1, u)) walk(p + 1, u);
    };
    if (feasible(0, G.identity())) walk(0, G.identity());
    std::sort(out.begin(), out.end(),
              [](const HeckeSubexpression& a, const HeckeSubexpression& b) { return a.positions < b.positions; });
    return out;
}

}  // namespace schubcone
