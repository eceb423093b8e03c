#include "schubcone/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>

#include "schubcone/errors.hpp"
#include "schubcone/linalg.hpp"

namespace schubcone {

namespace {

std::atomic<std::uint64_t> g_checked{0};
std::atomic<std::uint64_t> g_failed{0};

void record(bool ok) {
    ++g_checked;
    if (!ok) ++g_failed;
}

void require_positive_gens(const std::vector<Root>& gens) {
    for (const auto& g : gens)
        if (!g.is_positive())
            throw Error("integral cone membership needs generators with nonnegative coordinates; got " +
                        format_coords(g.coords));
}

}  // namespace

const char* to_string(DecompKind k) {
    switch (k) {
        case DecompKind::rational: return "rational";
        case DecompKind::integral: return "integral";
        case DecompKind::iso: return "iso";
        case DecompKind::bi: return "bi";
        case DecompKind::increasing_rational: return "increasing-rational";
        case DecompKind::increasing_integral: return "increasing-integral";
    }
    return "?";
}

DecompKind parse_decomp_kind(const std::string& s) {
    if (s == "rational" || s == "Q") return DecompKind::rational;
    if (s == "integral" || s == "Z") return DecompKind::integral;
    if (s == "iso") return DecompKind::iso;
    if (s == "bi") return DecompKind::bi;
    if (s == "increasing-rational" || s == "inc-Q") return DecompKind::increasing_rational;
    if (s == "increasing-integral" || s == "inc-Z") return DecompKind::increasing_integral;
    throw Error("kind must be rational, integral, iso, bi, increasing-rational or increasing-integral; got '" + s +
                "'");
}

bool is_increasing(DecompKind k) {
    return k == DecompKind::increasing_rational || k == DecompKind::increasing_integral;
}

CertificateStats certificate_stats() { return {g_checked.load(), g_failed.load()}; }

bool verify_certificate(const DecompositionCertificate& c) {
    bool ok = true;
    std::vector<Rational> sum(c.target.size(), 0);
    for (const auto& t : c.terms) {
        if (sgn(t.coefficient) <= 0 || t.generator.size() != c.target.size()) {
            ok = false;
            break;
        }
        for (int i = 0; i < c.target.size(); ++i) sum[i] += t.coefficient * t.generator[i];
    }
    if (ok)
        for (int i = 0; i < c.target.size(); ++i) ok = ok && sum[i] == c.target[i];
    record(ok);
    return ok;
}

bool verify_farkas(const FarkasCertificate& f, const Root& target, const std::vector<Root>& gens) {
    auto pair = [&](const Root& r) {
        Rational s = 0;
        for (int i = 0; i < r.size(); ++i) s += f.functional[i] * r[i];
        return s;
    };
    bool ok = static_cast<int>(f.functional.size()) == target.size() && sgn(pair(target)) < 0;
    for (const auto& g : gens) ok = ok && sgn(pair(g)) >= 0;
    record(ok);
    return ok;
}

RationalMembership cone_member_rational(const Root& target, const std::vector<Root>& gens) {
    const int n = target.size();
    const int m = static_cast<int>(gens.size());
    RationalMembership out;
    RationalMatrix A(n, RationalVector(m));
    RationalVector b(n);
    for (int i = 0; i < n; ++i) {
        b[i] = target[i];
        for (int k = 0; k < m; ++k) A[i][k] = gens[k][i];
    }
    auto lp = solve_nonnegative(A, b);
    if (lp.feasible) {
        DecompositionCertificate c;
        c.target = target;
        for (int k = 0; k < m; ++k)
            if (sgn(lp.solution[k]) > 0) c.terms.push_back({lp.solution[k], gens[k]});
        check_invariant(verify_certificate(c), "rational decomposition failed re-verification");
        out.member = true;
        out.decomposition = std::move(c);
    } else {
        FarkasCertificate f{lp.farkas};
        check_invariant(verify_farkas(f, target, gens), "Farkas certificate failed re-verification");
        out.farkas = std::move(f);
    }
    return out;
}

std::optional<DecompositionCertificate> cone_member_integral(const Root& target, const std::vector<Root>& gens) {
    require_positive_gens(gens);
    const int m = static_cast<int>(gens.size());
    DecompositionCertificate c;
    c.target = target;
    c.kind = DecompKind::integral;
    if (target.is_zero()) return c;
    if (!target.is_positive()) return std::nullopt;
    std::set<std::pair<int, Root>> dead;
    std::vector<int> coef(m, 0);
    std::function<bool(int, const Root&)> dfs = [&](int k, const Root& res) -> bool {
        if (res.is_zero()) return true;
        if (k == m) return false;
        if (dead.count({k, res})) return false;
        const Root& g = gens[k];
        int cmax = height(res) / height(g);
        Root r = res;
        int c0 = 0;
        // largest c keeping every coordinate nonnegative
        for (; c0 < cmax; ++c0) {
            Root t = r - g;
            if (!std::all_of(t.coords.begin(), t.coords.end(), [](int v) { return v >= 0; })) break;
            r = t;
        }
        for (int cc = c0; cc >= 0; --cc) {
            if (dfs(k + 1, r)) {
                coef[k] = cc;
                return true;
            }
            r = r + g;
        }
        dead.insert({k, res});
        return false;
    };
    if (!dfs(0, target)) return std::nullopt;
    for (int k = 0; k < m; ++k)
        if (coef[k] > 0) c.terms.push_back({Rational(coef[k]), gens[k]});
    check_invariant(verify_certificate(c), "integral decomposition failed re-verification");
    return c;
}

BigInt count_integral_representations(const Root& target, const std::vector<Root>& gens) {
    require_positive_gens(gens);
    const int m = static_cast<int>(gens.size());
    if (!target.is_zero() && !target.is_positive()) return 0;
    std::map<std::pair<int, Root>, BigInt> memo;
    std::function<BigInt(int, const Root&)> rec = [&](int k, const Root& res) -> BigInt {
        if (k == m) return res.is_zero() ? 1 : 0;
        auto key = std::make_pair(k, res);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        Root r = res;
        for (;;) {
            total += rec(k + 1, r);
            r = r - gens[k];
            if (!std::all_of(r.coords.begin(), r.coords.end(), [](int v) { return v >= 0; })) break;
        }
        memo.emplace(key, total);
        return total;
    };
    return rec(0, target);
}

std::vector<IsoPair> iso_pairs(const RootSystem& rs, const Root& alpha, const std::vector<Root>& gens) {
    std::vector<IsoPair> out;
    const int m = static_cast<int>(gens.size());
    for (int j = 0; j < m; ++j) {
        if (gens[j] == alpha) continue;
        for (int k = j + 1; k < m; ++k) {
            if (gens[k] == alpha) continue;
            if (rs.norm_sq(gens[j]) != rs.norm_sq(gens[k])) continue;
            Root s = gens[j] + gens[k];
            if (s.is_zero() || !proportional(s, alpha)) continue;
            // c alpha = s
            int i0 = 0;
            while (alpha[i0] == 0) ++i0;
            Rational c(s[i0], alpha[i0]);
            c.canonicalize();
            if (sgn(c) <= 0) continue;
            check_invariant(c == rs.coroot_pairing(gens[k], alpha) && c == rs.coroot_pairing(gens[j], alpha),
                            "iso-decomposition with c != <gamma, alpha^vee>");
            out.push_back({j, k, c});
        }
    }
    return out;
}

namespace {

std::vector<Root> others(const Root& alpha, const WeightedRootSet& S, const std::vector<WeylElt>* wt,
                         const WeylGroup& G) {
    int a = S.find(alpha);
    std::vector<Root> out;
    for (int k = 0; k < S.size(); ++k) {
        if (k == a) continue;
        if (wt && !G.bruhat_leq((*wt)[a], (*wt)[k])) continue;
        out.push_back(S.elements[k]);
    }
    return out;
}

}  // namespace

Decomposability is_decomposable(const WeylGroup& G, const Root& alpha, const WeightedRootSet& S, DecompKind kind,
                                WeightKind weight) {
    if (!S.contains(alpha)) throw Error("is_decomposable: " + G.roots().format(alpha) + " is not in the root set");
    const auto& rs = G.roots();
    const std::vector<WeylElt>* wt = is_increasing(kind) ? S.weights(weight) : nullptr;
    auto gens = others(alpha, S, wt, G);
    Decomposability out;
    switch (kind) {
        case DecompKind::rational:
        case DecompKind::increasing_rational: {
            auto r = cone_member_rational(alpha, gens);
            if (r.member) {
                out.decomposable = true;
                out.certificate = std::move(r.decomposition);
            }
            break;
        }
        case DecompKind::integral:
        case DecompKind::increasing_integral: {
            auto r = cone_member_integral(alpha, gens);
            if (r) {
                out.decomposable = true;
                out.certificate = std::move(r);
                out.certificate->outside_convention = !rs.is_simply_laced();
            }
            break;
        }
        case DecompKind::iso: {
            auto p = iso_pairs(rs, alpha, gens);
            if (!p.empty()) {
                DecompositionCertificate c;
                c.target = alpha;
                Rational inv = 1 / p[0].c;
                c.terms = {{inv, gens[p[0].j]}, {inv, gens[p[0].k]}};
                check_invariant(verify_certificate(c), "iso certificate failed re-verification");
                out.decomposable = true;
                out.certificate = std::move(c);
            }
            break;
        }
        case DecompKind::bi: {
            const int m = static_cast<int>(gens.size());
            for (int j = 0; j < m && !out.decomposable; ++j)
                for (int k = j + 1; k < m && !out.decomposable; ++k) {
                    if (proportional(gens[j], gens[k])) continue;
                    auto rsol = solve_pair(alpha, gens[j], gens[k]);
                    if (!rsol || sgn(rsol->first) <= 0 || sgn(rsol->second) <= 0) continue;
                    DecompositionCertificate c;
                    c.target = alpha;
                    c.terms = {{rsol->first, gens[j]}, {rsol->second, gens[k]}};
                    check_invariant(verify_certificate(c), "bi certificate failed re-verification");
                    out.decomposable = true;
                    out.certificate = std::move(c);
                }
            break;
        }
    }
    if (out.certificate) out.certificate->kind = kind;
    return out;
}

WeightedRootSet indecomposables(const WeylGroup& G, const WeightedRootSet& S, DecompKind kind, WeightKind weight) {
    std::vector<int> keep;
    for (int k = 0; k < S.size(); ++k)
        if (!is_decomposable(G, S.elements[k], S, kind, weight).decomposable) keep.push_back(k);
    return subset(S, keep);
}

DecompositionCertificate increasing_decomposition(const WeylGroup& G, const Root& alpha, const WeightedRootSet& S,
                                                  WeightKind weight, bool integral, bool force) {
    const auto& rs = G.roots();
    if (!S.contains(alpha)) throw Error("increasing_decomposition: " + rs.format(alpha) + " is not in the root set");
    const std::vector<WeylElt>* wt = S.weights(weight);
    auto dominates = [&](int k, int a) { return !wt || G.bruhat_leq((*wt)[a], (*wt)[k]); };
    DecompositionCertificate out;
    out.target = alpha;
    if (integral) {
        for (const auto& r : S.elements)
            if (!r.is_positive()) throw Error("increasing Z-decomposition needs a set of positive roots");
        if (!rs.is_simply_laced() && !force)
            throw Error(rs.name() + " is not simply laced; the Z-version is only defined for simply laced types (force to run)");
        out.kind = DecompKind::increasing_integral;
        out.outside_convention = !rs.is_simply_laced();
        // height-descending recursion
        std::map<int, BigInt> acc;
        std::function<void(int, const BigInt&)> expand = [&](int a, const BigInt& mult) {
            auto d = is_decomposable(G, S.elements[a], S, DecompKind::increasing_integral, weight);
            if (!d.decomposable) {
                acc[a] += mult;
                return;
            }
            for (const auto& t : d.certificate->terms) {
                int k = S.find(t.generator);
                check_invariant(height(t.generator) < height(S.elements[a]), "Z-decomposition did not lower height");
                expand(k, mult * t.coefficient.get_num());
            }
        };
        expand(S.find(alpha), 1);
        for (auto& [k, c] : acc) out.terms.push_back({Rational(c), S.elements[k]});
    } else {
        out.kind = DecompKind::increasing_rational;
        int a = S.find(alpha);
        std::vector<Root> gens;
        for (int k = 0; k < S.size(); ++k) {
            if (!dominates(k, a)) continue;
            if (is_decomposable(G, S.elements[k], S, DecompKind::increasing_rational, weight).decomposable) continue;
            gens.push_back(S.elements[k]);
        }
        if (std::find(gens.begin(), gens.end(), alpha) != gens.end()) {
            out.terms = {{Rational(1), alpha}};
        } else {
            auto r = cone_member_rational(alpha, gens);
            check_invariant(r.member, "no increasing Q-decomposition over S^{up Q}");
            out.terms = r.decomposition->terms;
        }
    }
    check_invariant(verify_certificate(out), "increasing decomposition failed re-verification");
    int a = S.find(alpha);
    for (const auto& t : out.terms) check_invariant(dominates(S.find(t.generator), a), "decomposition is not increasing");
    return out;
}

bool iso_indec_via_word(const WeylGroup& G, const InversionTable& T, int i) {
    if (i < 1 || i > T.size()) throw Error("position " + std::to_string(i) + " out of range");
    Word del = T.word;
    del.erase(del.begin() + (i - 1));
    bool by_word = G.is_reduced(del);
    bool by_pairs = iso_pairs(G.roots(), T.gammas[i - 1], T.gammas).empty();
    check_invariant(by_word == by_pairs, "iso-decomposability disagrees with reducedness of the deletion");
    return by_word;
}

}  // namespace schubcone
