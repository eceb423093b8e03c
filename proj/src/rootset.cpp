#include "schubcone/rootset.hpp"

#include <algorithm>

#include "schubcone/errors.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/linalg.hpp"

namespace schubcone {

InversionTable inversion_table(const WeylGroup& G, const Word& q) {
    if (!G.is_reduced(q)) throw Error("inversion_table needs a reduced word; '" + format_word(q) + "' is not");
    const auto& rs = G.roots();
    InversionTable T;
    T.word = q;
    T.x = G.from_word(q);
    const int L = static_cast<int>(q.size());
    WeylElt prefix = G.identity();
    for (int i = 0; i < L; ++i) {
        T.gammas.push_back(rs.root(prefix(rs.simple_index(q[i] - 1))));
        prefix = G.times_simple(prefix, q[i]);
        Word del = q;
        del.erase(del.begin() + i);
        T.coxeters.push_back(G.from_word(del));
        T.demazures.push_back(demazure_product(G, del));
    }
    // invariants
    auto inv = inversion_set(G, T.x);
    std::vector<Root> sorted = T.gammas;
    std::sort(sorted.begin(), sorted.end());
    check_invariant(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "gammas not distinct");
    std::sort(inv.begin(), inv.end());
    check_invariant(sorted == inv, "gammas differ from I(x^-1)");
    for (int i = 0; i < L; ++i) {
        check_invariant(T.coxeters[i] == G.multiply(G.reflection(T.gammas[i]), T.x), "x_i != s_gamma_i x");
        check_invariant(G.bruhat_leq(T.coxeters[i], T.demazures[i]), "z_i >= x_i fails");
    }
    return T;
}

std::vector<Root> inversion_set(const WeylGroup& G, const WeylElt& x) {
    const auto& rs = G.roots();
    WeylElt xi = G.inverse(x);
    std::vector<Root> out;
    for (int k = 0; k < rs.num_positive(); ++k)
        if (!rs.is_positive_index(xi(k))) out.push_back(rs.root(k));
    return out;
}

const char* to_string(WeightKind k) {
    switch (k) {
        case WeightKind::none: return "none";
        case WeightKind::coxeter: return "coxeter";
        case WeightKind::demazure: return "demazure";
    }
    return "?";
}

WeightKind parse_weight_kind(const std::string& s) {
    if (s == "none" || s == "trivial") return WeightKind::none;
    if (s == "coxeter" || s == "x") return WeightKind::coxeter;
    if (s == "demazure" || s == "z") return WeightKind::demazure;
    throw Error("weight must be none, coxeter or demazure, got '" + s + "'");
}

int WeightedRootSet::find(const Root& r) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == r) return i;
    return -1;
}

const std::vector<WeylElt>* WeightedRootSet::weights(WeightKind kind) const {
    switch (kind) {
        case WeightKind::none: return nullptr;
        case WeightKind::coxeter:
            if (!coxeter_weight) throw Error("root set carries no coxeter weight map");
            return &*coxeter_weight;
        case WeightKind::demazure:
            if (!demazure_weight) throw Error("root set carries no demazure weight map");
            return &*demazure_weight;
    }
    return nullptr;
}

WeightedRootSet weighted_set(const WeylGroup& G, const InversionTable& T) {
    WeightedRootSet S;
    S.elements = T.gammas;
    S.coxeter_weight = T.coxeters;
    S.demazure_weight = T.demazures;
    S.witness.assign(G.rank(), 1);
    return S;
}

WeightedRootSet subset(const WeightedRootSet& S, const std::vector<int>& keep) {
    WeightedRootSet out;
    out.witness = S.witness;
    if (S.coxeter_weight) out.coxeter_weight.emplace();
    if (S.demazure_weight) out.demazure_weight.emplace();
    for (int k : keep) {
        out.elements.push_back(S.elements[k]);
        if (S.coxeter_weight) out.coxeter_weight->push_back((*S.coxeter_weight)[k]);
        if (S.demazure_weight) out.demazure_weight->push_back((*S.demazure_weight)[k]);
    }
    return out;
}

WeightedRootSet restrict_geq(const WeylGroup& G, const WeightedRootSet& S, WeightKind kind, const WeylElt& w) {
    if (kind == WeightKind::none) throw Error("restrict_geq needs the coxeter or demazure weight");
    const auto& wt = *S.weights(kind);
    std::vector<int> keep;
    for (int k = 0; k < S.size(); ++k)
        if (G.bruhat_leq(w, wt[k])) keep.push_back(k);
    return subset(S, keep);
}

bool proportional(const Root& a, const Root& b) {
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<long long>(a[i]) * b[j] != static_cast<long long>(a[j]) * b[i]) return false;
    return true;
}

std::optional<std::pair<Rational, Rational>> solve_pair(const Root& v, const Root& a, const Root& b) {
    const int n = v.size();
    RationalMatrix A(n, RationalVector(2));
    RationalVector rhs(n);
    for (int i = 0; i < n; ++i) {
        A[i][0] = a[i];
        A[i][1] = b[i];
        rhs[i] = v[i];
    }
    auto x = solve_linear(A, rhs);
    if (!x) return std::nullopt;
    return std::make_pair((*x)[0], (*x)[1]);
}

WeightedRootSet validate_root_set(const RootSystem& rs, const std::vector<Root>& roots) {
    const int n = rs.rank();
    for (const auto& r : roots) {
        if (r.size() != n) throw Error("vector " + rs.format(r) + " has the wrong length");
        if (r.is_zero()) throw Error("root set contains the zero vector");
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (proportional(roots[i], roots[j]))
                throw Error("root set contains proportional elements " + rs.format(roots[i]) + " and " +
                            rs.format(roots[j]));
    WeightedRootSet S;
    S.elements = roots;
    bool all_pos = std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.is_positive(); });
    if (all_pos) {
        S.witness.assign(n, 1);
        return S;
    }
    // y >= 0, sum y = 1, sum y_k a_k = 0 has a solution iff no open half-space exists
    const int m = static_cast<int>(roots.size());
    RationalMatrix A(n + 1, RationalVector(m));
    RationalVector b(n + 1, 0);
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < n; ++i) A[i][k] = roots[k][i];
        A[n][k] = 1;
    }
    b[n] = 1;
    auto lp = solve_nonnegative(A, b);
    if (lp.feasible) {
        std::string cert;
        for (int k = 0; k < m; ++k) {
            if (sgn(lp.solution[k]) == 0) continue;
            if (!cert.empty()) cert += " + ";
            cert += to_string(lp.solution[k]) + "*" + rs.format(roots[k]);
        }
        throw Error("root set lies in no open half-space: " + cert + " = 0");
    }
    // farkas z = (delta, t): <delta, a_k> + t >= 0 and t < 0
    S.witness.assign(lp.farkas.begin(), lp.farkas.begin() + n);
    for (const auto& r : roots) {
        Rational p = 0;
        for (int i = 0; i < n; ++i) p += S.witness[i] * r[i];
        check_invariant(sgn(p) > 0, "half-space witness fails verification");
    }
    return S;
}

bool is_closed(const RootSystem& rs, const std::vector<Root>& S) {
    std::vector<char> in(rs.num_positive(), 0);
    for (const auto& r : S) {
        auto k = rs.find(r);
        if (!k || !rs.is_positive_index(*k)) throw Error("is_closed: " + rs.format(r) + " is not a positive root");
        in[*k] = 1;
    }
    const int N = rs.num_positive();
    // (i) positive combinations of two members that are roots stay inside
    for (int p = 0; p < N; ++p) {
        if (in[p]) continue;
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b) {
                auto rs_ = solve_pair(rs.root(p), S[a], S[b]);
                if (rs_ && sgn(rs_->first) > 0 && sgn(rs_->second) > 0) return false;
            }
    }
    // (ii) a + b in S forces a or b in S
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            auto s = rs.find(rs.root(a) + rs.root(b));
            if (s && in[*s] && !in[a] && !in[b]) return false;
        }
    return true;
}

}  // namespace schubcone
