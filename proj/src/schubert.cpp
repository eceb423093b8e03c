#include "schubcone/schubert.hpp"

#include <algorithm>
#include <set>

#include "schubcone/errors.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/linalg.hpp"

namespace schubcone {

namespace {

void check_levi(const WeylGroup& G, const Levi& J) {
    for (int j : J)
        if (j < 1 || j > G.rank()) throw Error("levi index " + std::to_string(j) + " out of range");
}

void require_pair(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J) {
    check_levi(G, J);
    if (!G.is_minimal_rep(x, J)) throw Error("x = " + G.display(x) + " is not a minimal coset representative");
    if (!G.is_minimal_rep(w, J)) throw Error("w = " + G.display(w) + " is not a minimal coset representative");
    if (!G.bruhat_leq(w, x)) throw Error("need w <= x; w = " + G.display(w) + ", x = " + G.display(x));
}

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

std::vector<Root> positive_part(const std::vector<Root>& v) {
    std::vector<Root> out;
    for (const auto& r : v)
        if (r.is_positive()) out.push_back(r);
    return out;
}

Root eps_root(const RootSystem& rs, int i, int si, int j, int sj) {
    std::vector<int> e(rs.epsilon_dim(), 0);
    e[i - 1] += si;
    e[j - 1] += sj;
    return rs.from_epsilon(e);
}

// sorted by the root ordering of rs
std::vector<Root> ordered(const RootSystem& rs, std::vector<Root> v) {
    std::sort(v.begin(), v.end(), [&](const Root& a, const Root& b) { return rs.index_of(a) < rs.index_of(b); });
    return v;
}

}  // namespace

bool in_levi(const Root& r, const Levi& J) {
    for (int i = 0; i < r.size(); ++i)
        if (r[i] != 0 && std::find(J.begin(), J.end(), i + 1) == J.end()) return false;
    return true;
}

std::vector<Root> ambient_weights(const WeylGroup& G, const WeylElt& x, const Levi& J) {
    check_levi(G, J);
    if (!G.is_minimal_rep(x, J)) throw Error("x = " + G.display(x) + " is not a minimal coset representative");
    const auto& rs = G.roots();
    std::vector<Root> out;
    for (int k = rs.num_positive(); k < rs.num_roots(); ++k)
        if (!in_levi(rs.root(k), J)) out.push_back(rs.root(x(k)));
    out = ordered(rs, out);

    auto inv = inversion_set(G, x);
    check_invariant(as_set(positive_part(out)) == as_set(inv), "ambient weights: positive part is not I(x^-1)");
    return out;
}

std::vector<Root> curve_weights(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J) {
    require_pair(G, x, w, J);
    std::vector<Root> out;
    for (const auto& a : ambient_weights(G, x, J))
        if (G.bruhat_leq(w, G.multiply(G.reflection(a), x))) out.push_back(a);
    return out;
}

std::vector<Root> kl_curve_weights(const WeylGroup& G, const InversionTable& T, const WeylElt& w) {
    if (!G.bruhat_leq(w, T.x)) throw Error("need w <= x");
    auto S = restrict_geq(G, weighted_set(G, T), WeightKind::coxeter, w).elements;
    auto cur = positive_part(curve_weights(G, T.x, w, {}));
    check_invariant(as_set(S) == as_set(cur), "KL curve weights differ from curve weights inside I(x^-1)");
    return S;
}

std::vector<Root> kl_demazure_upper(const WeylGroup& G, const InversionTable& T, const WeylElt& w) {
    if (!G.bruhat_leq(w, T.x)) throw Error("need w <= x");
    return restrict_geq(G, weighted_set(G, T), WeightKind::demazure, w).elements;
}

WeylElt u_ab(const WeylGroup& G, int a, int b) {
    const auto& rs = G.roots();
    const int n = rs.rank();
    if (rs.spec().family != 'D') throw Error("u_ab is defined in type D only");
    if (!(1 <= a && a < b && b < n - 1))
        throw Error("u_ab needs 1 <= a < b < n-1; got a=" + std::to_string(a) + ", b=" + std::to_string(b));
    const auto& r1 = G.reflection(eps_root(rs, a, 1, n, -1));
    const auto& r2 = G.reflection(eps_root(rs, a, 1, n, 1));
    const auto& r3 = G.reflection(eps_root(rs, b, 1, n - 1, 1));
    return G.multiply(r1, G.multiply(r2, r3));
}

std::vector<Root> phi_oth_typeD(const WeylGroup& G, const WeylElt& w) {
    const auto& rs = G.roots();
    if (rs.spec().family != 'D') throw Error("phi_oth_typeD needs type D");
    const int n = rs.rank();
    const auto& w0 = G.longest_element();
    std::vector<Root> out;
    for (int i = 1; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) {
            Root g = eps_root(rs, i, 1, j, 1);
            if (G.bruhat_leq(w, G.multiply(G.reflection(g), w0))) continue;
            if (G.bruhat_leq(w, G.multiply(u_ab(G, i, j), w0))) out.push_back(g);
        }
    return ordered(rs, out);
}

Coplanarity coplanarity(const RootSystem& rs, const std::vector<Root>& S, int sign) {
    if (sign != 1 && sign != -1) throw Error("coplanarity constant must be 1 or -1");
    Coplanarity c;
    c.sign = sign;
    if (S.empty()) {
        c.coplanar = true;
        c.functional.assign(rs.rank(), 0);
        return c;
    }
    RationalMatrix A;
    RationalVector b;
    for (const auto& a : S) {
        A.emplace_back(a.coords.begin(), a.coords.end());
        b.push_back(sign);
    }
    auto v = solve_linear(A, b);
    if (v) {
        c.coplanar = true;
        c.functional = *v;
    }
    return c;
}

bool is_coplanar(const RootSystem& rs, const std::vector<Root>& S) { return coplanarity(rs, S).coplanar; }

bool is_cominuscule_elt(const WeylGroup& G, const WeylElt& x) { return is_coplanar(G.roots(), inversion_set(G, x)); }

bool is_cominuscule_parabolic(const RootSystem& rs, const Levi& J) {
    std::set<int> in(J.begin(), J.end());
    std::vector<int> missing;
    for (int i = 1; i <= rs.rank(); ++i)
        if (!in.count(i)) missing.push_back(i);
    if (missing.size() != 1) return false;
    return rs.highest_root()[missing[0] - 1] == 1;
}

bool has_sum_triple(const RootSystem& rs, const std::vector<Root>& S) {
    (void)rs;
    auto s = as_set(S);
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (s.count(S[i] + S[j])) return true;
    return false;
}

std::optional<std::string> comin_char_condition(const WeylGroup& G, const WeylElt& x, const Levi& J) {
    const auto& rs = G.roots();
    if (!rs.is_simply_laced()) return std::nullopt;
    auto T = inversion_table(G, G.lexmin_reduced_word(x));
    auto S = weighted_set(G, T);
    if (indecomposables(G, S, DecompKind::integral, WeightKind::none).size() == S.size()) return "ii";
    char f = rs.spec().family;
    if ((f == 'A' || f == 'D') && G.is_fully_commutative(x)) return "iii";
    if (is_coplanar(rs, T.gammas)) return "v";
    if (is_cominuscule_parabolic(rs, J)) return "vi";
    return std::nullopt;
}

TangentWeights tangent_weights(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J,
                               std::optional<Word> word) {
    require_pair(G, x, w, J);
    if (word && G.from_word(*word) != x) throw Error("word does not multiply to x");
    const auto& rs = G.roots();
    const char f = rs.spec().family;
    TangentWeights out;
    auto cur = curve_weights(G, x, w, J);

    if (f == 'A') {
        out.roots = cur;
        out.provenance = "typeA";
        return out;
    }
    if (auto c = comin_char_condition(G, x, J)) {
        out.roots = cur;
        out.provenance = "comin-char:" + *c;
        return out;
    }
    const auto& w0 = G.longest_element();
    if (f == 'D' && x == w0 && J.empty()) {
        auto oth = phi_oth_typeD(G, w);
        auto cs = as_set(cur);
        std::vector<Root> tan = cur;
        for (const auto& g : oth) {
            check_invariant(!cs.count(g), "type D: other weight is already a curve weight");
            tan.push_back(g);
        }
        out.roots = ordered(rs, tan);
        out.other = oth;
        out.provenance = "lakshmibai-D-w0";
        return out;
    }
    if (x == w0 && J.empty()) {
        const auto& A = rs.cartan();
        for (int a = 0; a < rs.rank(); ++a)
            for (int b = 0; b < rs.rank(); ++b) {
                if (A[a][b] != -2) continue;
                WeylElt sa = G.simple(a + 1), sb = G.simple(b + 1);
                if (w != G.multiply(w0, G.multiply(sa, G.multiply(sb, sa)))) continue;
                Root al = rs.simple_root(a), be = rs.simple_root(b);
                out.roots = ordered(rs, {al, be, al + be, 2 * al + be});
                out.provenance = "bc2-rank2";
                return out;
            }
    }
    out.provenance = "unknown";
    return out;
}

std::optional<bool> is_kl_cominuscule_point(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J) {
    auto t = tangent_weights(G, x, w, J);
    if (!t.roots) return std::nullopt;
    return is_coplanar(G.roots(), positive_part(*t.roots));
}

WeightReport weight_report(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J,
                           std::optional<Word> word) {
    require_pair(G, x, w, J);
    const auto& rs = G.roots();
    WeightReport R;
    R.x = x;
    R.w = w;
    R.levi = J;
    R.word = word ? *word : G.lexmin_reduced_word(x);
    if (!G.is_reduced(R.word) || G.from_word(R.word) != x) throw Error("word is not a reduced word for x");
    auto T = inversion_table(G, R.word);

    R.phi_cur = curve_weights(G, x, w, J);
    R.phi_cur_kl = kl_curve_weights(G, T, w);

    int levi_pos = 0;
    for (const auto& r : rs.positive_roots())
        if (in_levi(r, J)) ++levi_pos;
    auto amb = ambient_weights(G, x, J);
    int amb_neg = 0;
    for (const auto& a : amb)
        if (!a.is_positive()) ++amb_neg;
    R.dim_x = rs.num_positive() - levi_pos - G.length(w);
    R.dim_y = G.length(x) - G.length(w);
    check_invariant(R.dim_y == R.dim_x - amb_neg, "dim Y != dim X - |x Phi_P^- cap Phi^-|");

    // phi_cur = (negative ambient) + phi_cur_kl
    {
        std::set<Root> split;
        for (const auto& a : amb)
            if (!a.is_positive()) split.insert(a);
        for (const auto& a : R.phi_cur_kl) split.insert(a);
        check_invariant(split == as_set(R.phi_cur), "curve weights do not split as negative ambient plus KL part");
    }

    R.rationally_smooth = static_cast<int>(R.phi_cur.size()) == R.dim_x;

    auto t = tangent_weights(G, x, w, J, R.word);
    R.phi_tan = t.roots;
    R.provenance = t.provenance;
    R.phi_oth = t.other;
    if (R.phi_tan) R.smooth = static_cast<int>(R.phi_tan->size()) == R.dim_x;

    R.reduced_subexpressions = count_reduced_subexpressions(G, R.word, w);
    auto cond = comin_char_condition(G, x, J);
    if (cond) {
        R.subexpression_criterion = "simply-laced";
        check_invariant(R.smooth.has_value(), "comin-char instance without tangent weights");
        check_invariant(*R.smooth == (R.reduced_subexpressions == 1),
                        "smoothness disagrees with the unique reduced subexpression test");
    } else if (is_cominuscule_parabolic(rs, J)) {
        R.subexpression_criterion = "cominuscule-parabolic";
    }

    R.fully_commutative_x = G.is_fully_commutative(x);
    R.coplanar_inversion = is_coplanar(rs, T.gammas);
    R.cominuscule_x = R.coplanar_inversion;
    R.cominuscule_p = is_cominuscule_parabolic(rs, J);
    return R;
}

std::map<Root, BigInt> kl_character_truncated(const WeylGroup& G, const InversionTable& T, const WeylElt& w,
                                              int height_bound) {
    if (height_bound < 0) throw Error("height bound must be nonnegative");
    if (!G.bruhat_leq(w, T.x)) throw Error("need w <= x");
    const int n = G.rank();
    std::map<Root, BigInt> acc;
    for (const auto& t : enumerate_hecke_subexpressions(G, T.word, w)) {
        std::vector<Root> gens;
        for (int i = 1; i <= T.size(); ++i)
            if (!std::binary_search(t.positions.begin(), t.positions.end(), i)) gens.push_back(T.gammas[i - 1]);
        const int sign = (t.excess % 2 == 0) ? 1 : -1;
        // each coefficient vector is visited once, so every zeta gets n_zeta hits
        Root cur{std::vector<int>(n, 0)};
        auto dfs = [&](auto&& self, std::size_t k, int budget) -> void {
            if (k == gens.size()) {
                acc[cur] += sign;
                return;
            }
            self(self, k + 1, budget);
            const int h = height(gens[k]);
            Root saved = cur;
            for (int c = 1; c * h <= budget; ++c) {
                cur = cur + gens[k];
                self(self, k + 1, budget - c * h);
            }
            cur = saved;
        };
        dfs(dfs, 0, height_bound);
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

WeylElt opposite_translate(const WeylGroup& G, const WeylElt& w) { return G.multiply(G.longest_element(), w); }

}  // namespace schubcone
