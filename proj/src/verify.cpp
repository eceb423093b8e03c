#include "schubcone/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "schubcone/errors.hpp"
#include "schubcone/hecke.hpp"
#include "schubcone/signed_perm.hpp"

namespace schubcone {

namespace {

struct Partial {
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    std::map<std::string, std::int64_t> counters;

    void expect(bool ok, const std::string& inst, const std::string& what) {
        if (!ok) violations.push_back({inst, what});
    }
};

// Runs body(i, part) for i < n on cfg.jobs threads. Results are merged in
// index order so the report does not depend on scheduling.
void parallel(int n, int jobs, SuiteReport& rep, const std::function<void(int, Partial&)>& body,
              const std::function<std::string(int)>& label) {
    std::vector<Partial> parts(n);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < n;) {
            try {
                body(i, parts[i]);
            } catch (const GuardExceeded&) {
                throw;
            } catch (const std::exception& e) {
                parts[i].violations.push_back({label(i), std::string("exception: ") + e.what()});
            }
        }
    };
    jobs = std::max(1, std::min(jobs, n));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < jobs; ++t) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }
    for (auto& p : parts) {
        rep.checked += p.checked;
        for (auto& v : p.violations) rep.violations.push_back(std::move(v));
        for (auto& [k, c] : p.counters) rep.counters[k] += c;
    }
}

std::string levi_str(const Levi& J) {
    std::string s = "[";
    for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
    return s + "]";
}

std::string inst(const WeylGroup& G, const WeylElt& x, const Word& q) {
    return "type=" + G.name() + " x=" + G.format(x) + " word=" + format_word(q);
}

std::string inst(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J) {
    return "type=" + G.name() + " x=" + G.format(x) + " w=" + G.format(w) + " levi=" + levi_str(J);
}

std::set<Root> set_of(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

// lexmin word plus seeded random reduced words, without repeats
std::vector<Word> sample_words(const WeylGroup& G, const WeylElt& x, const SuiteConfig& cfg, int idx) {
    std::mt19937_64 rng(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(idx));
    std::vector<Word> out{G.lexmin_reduced_word(x)};
    for (int k = 0; k < cfg.samples; ++k) {
        Word q = G.random_reduced_word(x, rng);
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
    return out;
}

bool in_cone_q(const Root& t, const std::vector<Root>& gens) { return cone_member_rational(t, gens).member; }

bool in_cone_z(const Root& t, const std::vector<Root>& gens) {
    if (t.is_zero()) return true;
    return cone_member_integral(t, gens).has_value();
}

// every element of A lies in the cone of B
bool cone_contains(const std::vector<Root>& A, const std::vector<Root>& B, bool integral) {
    for (const auto& a : A)
        if (!(integral ? in_cone_z(a, B) : in_cone_q(a, B))) return false;
    return true;
}

// indecomposable elements of subsets of a fixed root set, memoized by bitmask
class IndecCache {
 public:
    IndecCache(const WeylGroup& G, const WeightedRootSet& S) : G_(G), S_(S) {}

    std::uint64_t get(std::uint64_t mask, DecompKind kind) {
        auto key = std::make_pair(mask, static_cast<int>(kind));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<int> keep;
        for (int k = 0; k < S_.size(); ++k)
            if (mask >> k & 1) keep.push_back(k);
        auto sub = subset(S_, keep);
        std::uint64_t out = 0;
        for (std::size_t p = 0; p < keep.size(); ++p)
            if (!is_decomposable(G_, sub.elements[p], sub, kind, WeightKind::none).decomposable)
                out |= std::uint64_t{1} << keep[p];
        memo_.emplace(key, out);
        return out;
    }

    std::uint64_t full() const { return S_.size() == 64 ? ~0ULL : (std::uint64_t{1} << S_.size()) - 1; }

 private:
    const WeylGroup& G_;
    const WeightedRootSet& S_;
    std::map<std::pair<std::uint64_t, int>, std::uint64_t> memo_;
};

std::uint64_t weight_mask(const WeylGroup& G, const std::vector<WeylElt>& wt, const WeylElt& w) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < wt.size(); ++k)
        if (G.bruhat_leq(w, wt[k])) m |= std::uint64_t{1} << k;
    return m;
}

std::vector<Root> pick(const std::vector<Root>& v, std::uint64_t mask) {
    std::vector<Root> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (mask >> k & 1) out.push_back(v[k]);
    return out;
}

std::vector<WeylElt> below(const WeylGroup& G, const std::vector<WeylElt>& all, const WeylElt& x) {
    std::vector<WeylElt> out;
    for (const auto& w : all)
        if (G.bruhat_leq(w, x)) out.push_back(w);
    return out;
}

Word delete_at(const Word& q, int i) {
    Word d = q;
    d.erase(d.begin() + (i - 1));
    return d;
}

// ---------------------------------------------------------------- reduced-iso

void suite_reduced_iso(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    const auto& rs = G.roots();
    auto all = G.elements(cfg.max_order);
    const bool sl = rs.is_simply_laced();
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const WeylElt& x = all[idx];
            auto words = sample_words(G, x, cfg, idx);
            P.counters["words"] += static_cast<std::int64_t>(words.size());
            for (std::size_t wi = 0; wi < words.size(); ++wi) {
                const Word& q = words[wi];
                auto T = inversion_table(G, q);
                auto S = weighted_set(G, T);
                const int l = T.size();
                const std::string I = inst(G, x, q);
                for (int i = 1; i <= l; ++i) {
                    ++P.counters["positions"];
                    const std::string Ii = I + " i=" + std::to_string(i);
                    bool nonred = !G.is_reduced(delete_at(q, i));

                    // exchange pairs: alpha_{q_j} = s_{j+1}..^i..s_{k-1}(alpha_{q_k}), j < i < k
                    std::set<std::pair<int, int>> P2;
                    for (int k = i + 1; k <= l; ++k) {
                        int v = rs.simple_index(q[k - 1] - 1);
                        for (int m = k - 1; m >= 1; --m) {
                            if (m == i) continue;
                            if (m < i && v == rs.simple_index(q[m - 1] - 1)) P2.insert({m, k});
                            v = rs.reflect_index(q[m - 1] - 1, v);
                        }
                    }
                    std::set<std::pair<int, int>> P3;
                    for (const auto& p : iso_pairs(rs, T.gammas[i - 1], T.gammas)) {
                        int j = p.j + 1, k = p.k + 1;
                        P3.insert({j, k});
                        P.expect(j < i && i < k, Ii, "iso pair (" + std::to_string(j) + "," + std::to_string(k) +
                                                         ") does not straddle i");
                        Rational c = rs.coroot_pairing(T.gammas[k - 1], T.gammas[i - 1]);
                        P.expect(p.c == c && sgn(c) > 0, Ii, "iso coefficient is not <gamma_k, gamma_i^vee> > 0");
                    }
                    bool iv = is_decomposable(G, T.gammas[i - 1], S, DecompKind::iso).decomposable;
                    bool by_word = iso_indec_via_word(G, T, i);
                    P.expect(nonred == !P2.empty(), Ii, "(i) and (ii) disagree");
                    P.expect(nonred == !P3.empty(), Ii, "(i) and (iii) disagree");
                    P.expect(nonred == iv, Ii, "(i) and (iv) disagree");
                    P.expect(by_word == !nonred, Ii, "word test disagrees with deletion");
                    P.expect(P2 == P3, Ii, "pairs satisfying (ii) and (iii) differ");

                    if (nonred) {
                        ++P.counters["iso_decomposable"];
                        // the pair (j,k) singled out by minimal k, then maximal j
                        Word d = delete_at(q, i);
                        int k = -1;
                        for (int kk = i + 1; kk <= l && k < 0; ++kk) {
                            Word pre(d.begin(), d.begin() + (kk - 1));
                            if (!G.is_reduced(pre)) k = kk;
                        }
                        int j = -1;
                        if (k > 0) {
                            auto seg_len = [&](int from) {
                                Word s;
                                for (int m = from; m <= k; ++m)
                                    if (m != i) s.push_back(q[m - 1]);
                                return G.length(G.from_word(s));
                            };
                            for (int jj = i - 1; jj >= 1 && j < 0; --jj)
                                if (seg_len(jj) < seg_len(jj + 1)) j = jj;
                        }
                        P.expect(k > 0 && j > 0 && P3.count({j, k}), Ii, "minimal-k / maximal-j pair is not an iso pair");
                        if (k > 0 && j > 0) {
                            P.expect(G.bruhat_leq(T.demazures[i - 1], T.demazures[j - 1]) &&
                                         G.bruhat_leq(T.demazures[i - 1], T.demazures[k - 1]),
                                     Ii, "iso-decomposition picked by the exchange rule is not increasing");
                        }
                    } else {
                        P.expect(T.demazures[i - 1] == T.coxeters[i - 1], Ii, "iso-indecomposable but z_i != x_i");
                    }
                }

                // increasing indecomposables are iso-indecomposable
                auto iso_ind = set_of(indecomposables(G, S, DecompKind::iso).elements);
                for (const auto& r : indecomposables(G, S, DecompKind::increasing_rational).elements)
                    P.expect(iso_ind.count(r), I, "increasing Q-indecomposable " + rs.format(r) + " is iso-decomposable");
                if (sl)
                    for (const auto& r : indecomposables(G, S, DecompKind::increasing_integral).elements)
                        P.expect(iso_ind.count(r), I,
                                 "increasing Z-indecomposable " + rs.format(r) + " is iso-decomposable");

                if (wi == 0) {
                    // S lies in the cone of its indecomposables
                    auto q_ind = indecomposables(G, S, DecompKind::rational).elements;
                    P.expect(cone_contains(T.gammas, q_ind, false), I, "S not in Cone_Q(S^Q)");
                    if (sl) {
                        auto z_ind = indecomposables(G, S, DecompKind::integral).elements;
                        P.expect(cone_contains(T.gammas, z_ind, true), I, "S not in Cone_Z(S^Z)");
                    }
                }
                // gamma set and coxeter weights do not depend on the word
                if (wi > 0) {
                    auto T0 = inversion_table(G, words[0]);
                    std::map<Root, WeylElt> m0, m1;
                    for (int a = 0; a < l; ++a) {
                        m0.emplace(T0.gammas[a], T0.coxeters[a]);
                        m1.emplace(T.gammas[a], T.coxeters[a]);
                    }
                    P.expect(m0 == m1, I, "coxeter weight map depends on the reduced word");
                }
            }
            ++P.checked;
        },
        [&](int idx) { return "type=" + G.name() + " x=" + G.format(all[idx]); });
}

// ---------------------------------------------------------------- demazure

void suite_demazure(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    auto all = G.elements(cfg.max_order);
    std::vector<Word> words{Word{}};
    for (std::size_t start = 0; start < words.size(); ++start) {
        if (static_cast<int>(words[start].size()) >= cfg.word_length) continue;
        for (int a = 1; a <= G.rank(); ++a) {
            Word q = words[start];
            q.push_back(a);
            words.push_back(q);
        }
    }
    parallel(
        static_cast<int>(words.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const Word& q = words[idx];
            const std::string I = "type=" + G.name() + " word=" + format_word(q);
            WeylElt z = demazure_product(G, q);
            WeylElt xq = G.from_word(q);
            P.expect(G.bruhat_leq(xq, z), I, "x_q is not <= z_q");
            if (G.is_reduced(q)) P.expect(xq == z, I, "reduced word with z_q != x_q");
            P.expect(count_reduced_subexpressions(G, q, z) >= 1, I, "no reduced subexpression for z_q");
            auto reach = subexpression_products(G, q);
            std::set<WeylElt> rset(reach.begin(), reach.end());
            for (const auto& u : all)
                P.expect(rset.count(u) == static_cast<std::size_t>(G.bruhat_leq(u, z)), I + " u=" + G.format(u),
                         "subexpression existence disagrees with u <= z_q");
            for (int i = 1; i <= static_cast<int>(q.size()); ++i)
                P.expect(G.bruhat_leq(demazure_product(G, delete_at(q, i)), z), I + " i=" + std::to_string(i),
                         "Demazure product of a subword is not <= z_q");
            ++P.checked;
        },
        [&](int idx) { return "type=" + G.name() + " word=" + format_word(words[idx]); });
}

// ---------------------------------------------------------------- cones

void suite_cones(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    const auto& rs = G.roots();
    auto all = G.elements(cfg.max_order);
    const bool sl = rs.is_simply_laced();
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const WeylElt& x = all[idx];
            auto T = inversion_table(G, G.lexmin_reduced_word(x));
            auto S = weighted_set(G, T);
            IndecCache cache(G, S);
            const auto full = cache.full();
            const auto iso = cache.get(full, DecompKind::iso);
            const auto sq = cache.get(full, DecompKind::rational);
            const auto sz = sl ? cache.get(full, DecompKind::integral) : 0;
            for (const auto& w : below(G, all, x)) {
                const std::string I = inst(G, x, w, {}) + " word=" + format_word(T.word);
                auto mz = weight_mask(G, T.demazures, w);
                auto mx = weight_mask(G, T.coxeters, w);
                P.expect((mx & ~mz) == 0, I, "S_{x>=w} not inside S_{z>=w}");
                auto gz = pick(T.gammas, mz), gx = pick(T.gammas, mx);
                auto extra = pick(T.gammas, mz & ~mx);
                P.expect(cone_contains(extra, gx, false), I, "Cone_Q(S_{z>=w}) != Cone_Q(S_{x>=w})");
                P.expect(cache.get(mz, DecompKind::rational) == cache.get(mx, DecompKind::rational), I,
                         "(S_{z>=w})^Q != (S_{x>=w})^Q");
                P.expect((iso & mz) == (iso & mx), I, "(S^iso)_{z>=w} != (S^iso)_{x>=w}");
                P.expect((sq & mz) == (sq & mx), I, "(S^Q)_{z>=w} != (S^Q)_{x>=w}");
                if (sl) {
                    P.expect(cone_contains(extra, gx, true), I, "Cone_Z(S_{z>=w}) != Cone_Z(S_{x>=w})");
                    P.expect(cache.get(mz, DecompKind::integral) == cache.get(mx, DecompKind::integral), I,
                             "(S_{z>=w})^Z != (S_{x>=w})^Z");
                    P.expect((sz & mz) == (sz & mx), I, "(S^Z)_{z>=w} != (S^Z)_{x>=w}");
                }
                if (mz != mx) ++P.counters["z_differs_from_x"];
                ++P.checked;
            }
        },
        [&](int idx) { return "type=" + G.name() + " x=" + G.format(all[idx]); });
}

// ---------------------------------------------------------------- classical-indec

void suite_classical_indec(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    const auto& rs = G.roots();
    if (!rs.is_classical()) throw Error("suite classical-indec needs a classical type; got " + G.name());
    auto all = G.elements(cfg.max_order);
    const bool sl = rs.is_simply_laced();
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const WeylElt& x = all[idx];
            auto T = inversion_table(G, G.lexmin_reduced_word(x));
            auto S = weighted_set(G, T);
            const std::string I = inst(G, x, T.word);
            P.expect(is_closed(rs, T.gammas), I, "inversion set is not closed");
            for (const auto& a : T.gammas) {
                const std::string Ia = I + " alpha=" + rs.format(a);
                bool iso = is_decomposable(G, a, S, DecompKind::iso).decomposable;
                bool bi = is_decomposable(G, a, S, DecompKind::bi).decomposable;
                bool rat = is_decomposable(G, a, S, DecompKind::rational).decomposable;
                bool in = is_decomposable(G, a, S, DecompKind::integral).decomposable;
                P.expect(iso == rat, Ia, "rational and iso decomposability differ");
                P.expect(iso == bi, Ia, "iso and bi decomposability differ");
                P.expect(!bi || rat, Ia, "bi-decomposable but rationally indecomposable");
                P.expect(!in || rat, Ia, "integrally decomposable but rationally indecomposable");
                P.expect(!rat || bi, Ia, "rationally decomposable but bi-indecomposable");
                if (sl) {
                    P.expect(!iso || in, Ia, "iso-decomposable but integrally indecomposable");
                    P.expect(rat == in, Ia, "rational and integral decomposability differ");
                }
                if (rat && !in) ++P.counters["rational_ne_integral"];
            }
            IndecCache cache(G, S);
            const auto full = cache.full();
            const auto sq = cache.get(full, DecompKind::rational);
            const auto sz = sl ? cache.get(full, DecompKind::integral) : 0;
            for (const auto& w : below(G, all, x)) {
                const std::string Iw = inst(G, x, w, {}) + " word=" + format_word(T.word);
                auto mz = weight_mask(G, T.demazures, w);
                auto mx = weight_mask(G, T.coxeters, w);
                auto zq = cache.get(mz, DecompKind::rational);
                P.expect(zq == cache.get(mz, DecompKind::iso), Iw, "(S_{z>=w})^Q != iso(S_{z>=w})");
                P.expect((sq & mx) == cache.get(mx, DecompKind::rational), Iw, "(S^Q)_{x>=w} != (S_{x>=w})^Q");
                P.expect(cache.get(mx, DecompKind::rational) == (sq & mz), Iw, "(S_{x>=w})^Q != (S^Q)_{z>=w}");
                P.expect((sq & mz) == zq, Iw, "(S^Q)_{z>=w} != (S_{z>=w})^Q");
                if (sl) {
                    auto zz = cache.get(mz, DecompKind::integral);
                    P.expect(zz == cache.get(mz, DecompKind::iso), Iw, "(S_{z>=w})^Z != iso(S_{z>=w})");
                    P.expect((sz & mx) == cache.get(mx, DecompKind::integral), Iw, "(S^Z)_{x>=w} != (S_{x>=w})^Z");
                    P.expect((sz & mz) == zz, Iw, "(S^Z)_{z>=w} != (S_{z>=w})^Z");
                }
                ++P.counters["pairs"];
            }
            ++P.checked;
        },
        [&](int idx) { return "type=" + G.name() + " x=" + G.format(all[idx]); });
    const char f = rs.spec().family;
    if ((f == 'B' || f == 'C') && rep.counters["rational_ne_integral"] == 0)
        rep.violations.push_back({"type=" + G.name(), "no instance separates rational from integral indecomposability"});
}

// ---------------------------------------------------------------- allin

void suite_allin(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    const auto& rs = G.roots();
    auto all = G.elements(cfg.max_order);
    const bool sl = rs.is_simply_laced();
    const char f = rs.spec().family;
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const WeylElt& x = all[idx];
            auto T = inversion_table(G, G.lexmin_reduced_word(x));
            auto S = weighted_set(G, T);
            const std::string I = inst(G, x, T.word);
            const int n = S.size();
            bool c1 = is_coplanar(rs, T.gammas);
            bool c2 = indecomposables(G, S, DecompKind::integral).size() == n;
            bool c3 = !has_sum_triple(rs, T.gammas);
            bool c4 = indecomposables(G, S, DecompKind::rational).size() == n;
            bool c5 = indecomposables(G, S, DecompKind::iso).size() == n;
            bool c6 = G.is_fully_commutative(x);
            P.expect(!c1 || c2, I, "coplanar but S^Z != S");
            P.expect(!c2 || c3, I, "S^Z = S but S has a triple a, b, a+b");
            P.expect(!c4 || c2, I, "S^Q = S but S^Z != S");
            if (sl) {
                P.expect(c3 == c5, I, "no-triple and S^iso = S differ");
                P.expect(!c1 || c4, I, "coplanar but S^Q != S");
                P.expect(c3 == c6, I, "no-triple and fully commutative differ");
            }
            if (f == 'A' || f == 'D') P.expect(c2 == c6, I, "S^Z = S and fully commutative differ");
            P.expect(!c1 || c6, I, "cominuscule but not fully commutative");
            if (c1) {
                ++P.counters["cominuscule"];
                for (const auto& w : below(G, all, x)) {
                    auto kl = is_kl_cominuscule_point(G, x, w, {});
                    if (!kl) continue;
                    ++P.counters["kl_point_checked"];
                    P.expect(*kl, inst(G, x, w, {}), "cominuscule x is not a KL cominuscule point");
                }
            }
            if (c6) ++P.counters["fully_commutative"];
            if (c2) ++P.counters["all_integrally_indecomposable"];
            ++P.checked;
        },
        [&](int idx) { return "type=" + G.name() + " x=" + G.format(all[idx]); });
}

// ---------------------------------------------------------------- main

struct Instance {
    WeylElt x, w;
    Levi J;
};

std::vector<Levi> maximal_levis(const WeylGroup& G) {
    std::vector<Levi> out;
    for (int i = 1; i <= G.rank(); ++i) {
        Levi J;
        for (int j = 1; j <= G.rank(); ++j)
            if (j != i) J.push_back(j);
        out.push_back(J);
    }
    return out;
}

std::vector<Instance> computable_instances(const WeylGroup& G, const std::vector<WeylElt>& all) {
    const auto& rs = G.roots();
    const char f = rs.spec().family;
    std::vector<Instance> out;
    std::vector<Levi> levis{Levi{}};
    for (auto& J : maximal_levis(G)) levis.push_back(J);
    const auto& w0 = G.longest_element();
    std::set<std::pair<WeylElt, WeylElt>> seen_borel;
    if (f == 'A' || rs.is_simply_laced()) {
        for (const auto& J : levis) {
            std::vector<WeylElt> reps;
            for (const auto& u : all)
                if (G.is_minimal_rep(u, J)) reps.push_back(u);
            for (const auto& x : reps) {
                if (f != 'A' && !comin_char_condition(G, x, J)) continue;
                for (const auto& w : reps)
                    if (G.bruhat_leq(w, x)) out.push_back({x, w, J});
            }
        }
    }
    if (f == 'D')
        for (const auto& w : all)
            if (!comin_char_condition(G, w0, {})) out.push_back({w0, w, {}});
    const auto& A = rs.cartan();
    for (int a = 0; a < rs.rank(); ++a)
        for (int b = 0; b < rs.rank(); ++b)
            if (A[a][b] == -2) {
                WeylElt sa = G.simple(a + 1), sb = G.simple(b + 1);
                out.push_back({w0, G.multiply(w0, G.multiply(sa, G.multiply(sb, sa))), {}});
            }
    return out;
}

void check_main_instance(const WeylGroup& G, const Instance& in, Partial& P) {
    const auto& rs = G.roots();
    const bool sl = rs.is_simply_laced();
    const std::string I = inst(G, in.x, in.w, in.J);
    auto R = weight_report(G, in.x, in.w, in.J);
    if (!R.phi_tan) {
        P.expect(false, I, "tangent weights expected to be computable");
        return;
    }
    ++P.counters["provenance:" + R.provenance];
    const auto& tan = *R.phi_tan;
    auto amb = ambient_weights(G, in.x, in.J);
    auto tset = set_of(tan), aset = set_of(amb);
    for (const auto& c : R.phi_cur) P.expect(tset.count(c), I, "curve weight " + rs.format(c) + " not tangent");
    for (const auto& t : tan) P.expect(aset.count(t), I, "tangent weight " + rs.format(t) + " outside x Phi_P^-");
    for (const auto& a : amb)
        if (!a.is_positive()) P.expect(tset.count(a), I, "negative ambient weight " + rs.format(a) + " not tangent");

    // -x^{-1} maps x Phi_P^- into the positive roots and preserves the lattice
    const WeylElt xinv = G.inverse(in.x);
    auto pull = [&](const std::vector<Root>& v) {
        std::vector<Root> out;
        for (const auto& r : v) out.push_back(-G.apply(xinv, r));
        return out;
    };
    auto tan_p = pull(tan), cur_p = pull(R.phi_cur);
    P.expect(cone_contains(tan_p, cur_p, false), I, "Phi_tan not in Cone_Q(Phi_cur)");
    if (sl) P.expect(cone_contains(tan_p, cur_p, true), I, "Phi_tan not in Cone_Z(Phi_cur)");

    std::vector<Root> tan_kl;
    for (const auto& t : tan)
        if (t.is_positive()) tan_kl.push_back(t);
    P.expect(cone_contains(tan_kl, R.phi_cur_kl, false), I, "Phi_tan^KL not in Cone_Q(Phi_cur^KL)");
    auto T = inversion_table(G, R.word);
    auto upper = kl_demazure_upper(G, T, in.w);
    P.expect(cone_contains(tan_kl, upper, false), I, "Phi_tan^KL not in Cone_Q{gamma_i : z_i >= w}");
    if (sl) {
        P.expect(cone_contains(tan_kl, R.phi_cur_kl, true), I, "Phi_tan^KL not in Cone_Z(Phi_cur^KL)");
        P.expect(cone_contains(tan_kl, upper, true), I, "Phi_tan^KL not in Cone_Z{gamma_i : z_i >= w}");
    }

    const int n_cur = static_cast<int>(R.phi_cur.size()), n_tan = static_cast<int>(tan.size());
    P.expect(n_cur >= R.dim_x, I, "|Phi_cur| < dim X^w");
    P.expect(n_tan >= R.dim_x, I, "|Phi_tan| < dim X^w");
    P.expect(static_cast<int>(R.phi_cur_kl.size()) >= R.dim_y, I, "|Phi_cur^KL| < dim Y");
    if (n_tan == R.dim_x) P.expect(set_of(R.phi_cur) == tset, I, "smooth but Phi_cur != Phi_tan");
    if (n_cur == R.dim_x && n_tan > R.dim_x) P.expect(n_cur != n_tan, I, "singular, rationally smooth, yet Phi_cur = Phi_tan");

    // indecomposable inversions are tangent iff s_a x >= w
    auto S = weighted_set(G, T);
    auto klset = set_of(tan_kl);
    for (const auto& a : indecomposables(G, S, DecompKind::rational).elements) {
        bool up = G.bruhat_leq(in.w, G.multiply(G.reflection(a), in.x));
        P.expect(klset.count(a) == static_cast<std::size_t>(up), I + " alpha=" + rs.format(a),
                 "indecomposable inversion: tangency disagrees with s_a x >= w");
    }
    if (in.J.empty())
        for (int i = 0; i < rs.rank(); ++i) {
            Root a = G.apply(in.x, -rs.simple_root(i));
            bool up = G.bruhat_leq(in.w, G.multiply(G.reflection(a), in.x));
            P.expect(tset.count(a) == static_cast<std::size_t>(up), I + " alpha=" + rs.format(a),
                     "x(-alpha_i): tangency disagrees with s_a x >= w");
        }
    if (R.phi_oth) {
        const int n = rs.rank();
        for (const auto& g : *R.phi_oth) {
            // e_i + e_j = (e_i - e_{n-1}) + (e_j + e_{n-1})
            auto e = rs.to_epsilon(g);
            int i = -1, j = -1;
            for (int p = 0; p < n; ++p)
                if (e[p]) (i < 0 ? i : j) = p;
            std::vector<int> u(n, 0), v(n, 0);
            u[i] = 1;
            u[n - 2] = -1;
            v[j] = 1;
            v[n - 2] = 1;
            auto cs = set_of(R.phi_cur);
            P.expect(cs.count(rs.from_epsilon(u)) && cs.count(rs.from_epsilon(v)), I,
                     "other weight " + rs.epsilon_string(g) + " is not a sum of two curve weights");
        }
    }
    ++P.checked;
}

void suite_main(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    const auto& rs = G.roots();
    auto all = G.elements(cfg.max_order);
    auto insts = computable_instances(G, all);
    parallel(
        static_cast<int>(insts.size()), cfg.jobs, rep, [&](int i, Partial& P) { check_main_instance(G, insts[i], P); },
        [&](int i) { return inst(G, insts[i].x, insts[i].w, insts[i].J); });

    if (!rs.is_classical()) return;
    // x = w0: the indecomposable curve weights are the simple roots below w w0
    const auto& w0 = G.longest_element();
    const bool sl = rs.is_simply_laced();
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const WeylElt& w = all[idx];
            const std::string I = inst(G, w0, w, {});
            auto cur = curve_weights(G, w0, w, {});
            auto S = validate_root_set(rs, cur);
            std::set<Root> expect;
            for (int i = 0; i < rs.rank(); ++i)
                if (G.bruhat_leq(G.simple(i + 1), G.multiply(w, w0))) expect.insert(rs.simple_root(i));
            P.expect(set_of(indecomposables(G, S, DecompKind::rational).elements) == expect, I,
                     "(Phi_cur)^Q at w0 is not {a simple : s_a <= w w0}");
            if (sl)
                P.expect(set_of(indecomposables(G, S, DecompKind::integral).elements) == expect, I,
                         "(Phi_cur)^Z at w0 is not {a simple : s_a <= w w0}");
            ++P.counters["w0_simple_check"];
            ++P.checked;
        },
        [&](int idx) { return inst(G, w0, all[idx], {}); });
}

// ---------------------------------------------------------------- smooth

void suite_smooth(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    const auto& rs = G.roots();
    auto all = G.elements(cfg.max_order);
    const bool sl = rs.is_simply_laced();
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const WeylElt& x = all[idx];
            auto words = sample_words(G, x, cfg, idx);
            auto gate = sl ? comin_char_condition(G, x, {}) : std::nullopt;
            for (const auto& w : below(G, all, x)) {
                const int dy = G.length(x) - G.length(w);
                // |{i : z_i >= w}| = l(x) - l(w) iff the reduced subexpression is unique
                for (const auto& q : words) {
                    auto T = inversion_table(G, q);
                    int M = 0;
                    for (const auto& z : T.demazures) M += G.bruhat_leq(w, z);
                    bool unique = count_reduced_subexpressions(G, q, w) == 1;
                    P.expect((M == dy) == unique, inst(G, x, w, {}) + " word=" + format_word(q),
                             "|M| = l(x)-l(w) disagrees with a unique reduced subexpression");
                }
                if (gate) {
                    const std::string I = inst(G, x, w, {});
                    auto R = weight_report(G, x, w, {});
                    bool s1 = *R.smooth;
                    int tan_kl = 0;
                    for (const auto& t : *R.phi_tan) tan_kl += t.is_positive();
                    bool s2 = tan_kl == R.dim_y;
                    bool s3 = static_cast<int>(R.phi_cur.size()) == R.dim_x;
                    bool s4 = static_cast<int>(R.phi_cur_kl.size()) == R.dim_y;
                    P.expect(s1 == s2 && s2 == s3 && s3 == s4, I, "smoothness conditions (i)-(iv) disagree");
                    for (const auto& q : words)
                        P.expect(s1 == (count_reduced_subexpressions(G, q, w) == 1), I + " word=" + format_word(q),
                                 "smooth disagrees with a unique reduced subexpression");
                    ++P.counters["gated_pairs"];
                    if (s1) ++P.counters["smooth"];
                }
                ++P.checked;
            }
            if (gate) ++P.counters["gated_x:" + *gate];
        },
        [&](int idx) { return "type=" + G.name() + " x=" + G.format(all[idx]); });

    if (!sl) return;
    // cominuscule maximal parabolics
    for (const auto& J : maximal_levis(G)) {
        if (!is_cominuscule_parabolic(rs, J)) continue;
        std::vector<WeylElt> reps;
        for (const auto& u : all)
            if (G.is_minimal_rep(u, J)) reps.push_back(u);
        parallel(
            static_cast<int>(reps.size()), cfg.jobs, rep,
            [&](int idx, Partial& P) {
                const WeylElt& x = reps[idx];
                for (const auto& w : reps) {
                    if (!G.bruhat_leq(w, x)) continue;
                    const std::string I = inst(G, x, w, J);
                    auto R = weight_report(G, x, w, J);
                    P.expect(R.phi_tan.has_value(), I, "cominuscule parabolic without tangent weights");
                    if (!R.phi_tan) continue;
                    bool smooth = static_cast<int>(R.phi_tan->size()) == R.dim_x;
                    P.expect(smooth == (R.reduced_subexpressions == 1), I,
                             "cominuscule parabolic: smooth disagrees with a unique reduced subexpression");
                    P.expect(smooth == (static_cast<int>(R.phi_cur.size()) == R.dim_x), I,
                             "cominuscule parabolic: smooth disagrees with |Phi_cur| = dim");
                    ++P.counters["parabolic_pairs"];
                    ++P.checked;
                }
            },
            [&](int idx) { return inst(G, reps[idx], reps[idx], J); });
    }
}

// ---------------------------------------------------------------- character

void suite_character(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    const auto& rs = G.roots();
    auto all = G.elements(cfg.max_order);
    const int bound = cfg.height_bound;
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            const WeylElt& x = all[idx];
            auto T = inversion_table(G, G.lexmin_reduced_word(x));
            // lattice points of height <= bound in the cone of all gammas
            std::set<Root> pts;
            {
                Root cur{std::vector<int>(rs.rank(), 0)};
                std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
                    if (k == T.gammas.size()) {
                        pts.insert(cur);
                        return;
                    }
                    rec(k + 1, budget);
                    Root saved = cur;
                    for (int c = 1; c * height(T.gammas[k]) <= budget; ++c) {
                        cur = cur + T.gammas[k];
                        rec(k + 1, budget - c * height(T.gammas[k]));
                    }
                    cur = saved;
                };
                rec(0, bound);
            }
            for (const auto& w : below(G, all, x)) {
                const std::string I = inst(G, x, w, {}) + " word=" + format_word(T.word) + " bound=" + std::to_string(bound);
                auto ch = kl_character_truncated(G, T, w, bound);
                auto upper = kl_demazure_upper(G, T, w);
                for (const auto& [z, c] : ch)
                    P.expect(in_cone_z(z, upper), I + " zeta=" + rs.format(z), "weight outside Cone_Z{gamma_i : z_i >= w}");
                // recompute via representation counts
                std::map<Root, BigInt> alt;
                for (const auto& t : enumerate_hecke_subexpressions(G, T.word, w)) {
                    std::vector<Root> gens;
                    for (int i = 1; i <= T.size(); ++i)
                        if (!std::binary_search(t.positions.begin(), t.positions.end(), i)) {
                            gens.push_back(T.gammas[i - 1]);
                            P.expect(G.bruhat_leq(w, T.demazures[i - 1]), I, "deleted position with z_i !>= w");
                        }
                    const int sign = t.excess % 2 ? -1 : 1;
                    for (const auto& z : pts) {
                        BigInt n = z.is_zero() ? BigInt(1) : count_integral_representations(z, gens);
                        if (n != 0) alt[z] += sign * n;
                    }
                }
                for (auto it = alt.begin(); it != alt.end();) it = it->second == 0 ? alt.erase(it) : std::next(it);
                P.expect(alt == ch, I, "character differs from the representation-count recomputation");
                if (w == x) {
                    std::map<Root, BigInt> one{{Root{std::vector<int>(rs.rank(), 0)}, BigInt(1)}};
                    P.expect(ch == one, I, "w = x: character is not 1");
                }
                ++P.checked;
            }
        },
        [&](int idx) { return "type=" + G.name() + " x=" + G.format(all[idx]); });
}

// ---------------------------------------------------------------- exceptional-explore

void suite_exceptional(const WeylGroup& G, const SuiteConfig& cfg, SuiteReport& rep) {
    auto all = G.elements(cfg.max_order);
    parallel(
        static_cast<int>(all.size()), cfg.jobs, rep,
        [&](int idx, Partial& P) {
            auto T = inversion_table(G, G.lexmin_reduced_word(all[idx]));
            auto S = weighted_set(G, T);
            for (const auto& a : T.gammas) {
                bool rat = is_decomposable(G, a, S, DecompKind::rational).decomposable;
                if (!rat) continue;
                ++P.counters["rationally_decomposable"];
                if (is_decomposable(G, a, S, DecompKind::bi).decomposable)
                    ++P.counters["also_bi_decomposable"];
                else
                    ++P.counters["rational_not_bi"];
            }
            ++P.checked;
        },
        [&](int idx) { return "type=" + G.name() + " x=" + G.format(all[idx]); });
}

// ---------------------------------------------------------------- paper-examples

class Fixtures {
 public:
    Fixtures(const WeylGroup& G, SuiteReport& rep) : G(G), rs(G.roots()), rep_(rep) {}

    void check(const std::string& name, const std::function<bool()>& f) {
        ++rep_.checked;
        try {
            if (!f()) rep_.violations.push_back({"type=" + G.name() + " fixture=" + name, "fixture mismatch"});
        } catch (const std::exception& e) {
            rep_.violations.push_back({"type=" + G.name() + " fixture=" + name, std::string("exception: ") + e.what()});
        }
    }

    WeylElt W(const std::string& word) const { return G.from_word(parse_word(word)); }
    Root E(const std::string& s) const { return rs.parse_root(s); }
    std::set<Root> Es(std::initializer_list<const char*> v) const {
        std::set<Root> out;
        for (auto s : v) out.insert(E(s));
        return out;
    }

    const WeylGroup& G;
    const RootSystem& rs;

 private:
    SuiteReport& rep_;
};

void fixtures_a2(Fixtures& F) {
    const auto& G = F.G;
    F.check("reduced-deletion-121", [&] {
        auto T = inversion_table(G, {1, 2, 1});
        return T.gammas[1] == Root{1, 1} && T.demazures[1] == F.W("1");
    });
    F.check("reduced-deletion-212", [&] {
        auto T = inversion_table(G, {2, 1, 2});
        return T.gammas[1] == Root{1, 1} && T.demazures[1] == F.W("2");
    });
    F.check("table-121", [&] {
        auto T = inversion_table(G, {1, 2, 1});
        return T.gammas == std::vector<Root>{{1, 0}, {1, 1}, {0, 1}} &&
               T.coxeters == std::vector<WeylElt>{F.W("2,1"), F.W(""), F.W("1,2")} &&
               T.demazures == std::vector<WeylElt>{F.W("2,1"), F.W("1"), F.W("1,2")};
    });
    F.check("demazure-not-reduced", [&] {
        Word q{1, 1, 2, 1, 2};
        return demazure_product(G, q) == F.W("1,2,1") && G.from_word(q) == demazure_product(G, q);
    });
    F.check("hecke-T", [&] {
        auto t = enumerate_hecke_subexpressions(G, {1, 2, 1}, F.W("1"));
        return t.size() == 3 && t[0].positions == std::vector<int>{1} && t[0].excess == 0 &&
               t[1].positions == std::vector<int>{1, 3} && t[1].excess == 1 && t[2].positions == std::vector<int>{3} &&
               t[2].excess == 0;
    });
    F.check("character-A2", [&] {
        auto ch = kl_character_truncated(G, inversion_table(G, {1, 2, 1}), F.W("1"), 0);
        return ch.size() == 1 && ch.begin()->first == Root{0, 0} && ch.begin()->second == 1;
    });
    F.check("iso-via-word", [&] {
        auto T = inversion_table(G, {1, 2, 1});
        return !iso_indec_via_word(G, T, 2) && iso_indec_via_word(G, T, 1) && T.demazures[0] == T.coxeters[0];
    });
}

void fixtures_b2(Fixtures& F) {
    const auto& G = F.G;
    const auto& rs = F.rs;
    F.check("positive-roots-eps", [&] { return set_of(rs.positive_roots()) == F.Es({"e1", "e2", "e1-e2", "e1+e2"}); });
    F.check("difficulty", [&] {
        auto r = cone_member_rational(F.E("e1"), {F.E("e1-e2"), F.E("e1+e2")});
        if (!r.member) return false;
        for (const auto& t : r.decomposition->terms)
            if (t.coefficient != Rational(1, 2)) return false;
        return r.decomposition->terms.size() == 2;
    });
    auto phi = validate_root_set(rs, rs.positive_roots());
    F.check("increasing-up", [&] {
        return set_of(indecomposables(G, phi, DecompKind::increasing_rational, WeightKind::none).elements) ==
               F.Es({"e1-e2", "e2"});
    });
    F.check("increasing-decomposition", [&] {
        auto c = increasing_decomposition(G, F.E("e1"), phi, WeightKind::none, false);
        std::map<Root, Rational> m;
        for (const auto& t : c.terms) m[t.generator] = t.coefficient;
        return m == std::map<Root, Rational>{{F.E("e1-e2"), 1}, {F.E("e2"), 1}};
    });
    // alpha = alpha1 (long), beta = alpha2 (short), c = 2
    auto T = inversion_table(G, {1, 2, 1});
    auto S = weighted_set(G, T);
    F.check("q-vs-z-inversions", [&] { return T.gammas == std::vector<Root>{{1, 0}, {1, 1}, {1, 2}}; });
    F.check("q-vs-z-rational", [&] {
        return set_of(indecomposables(G, S, DecompKind::rational).elements) == std::set<Root>{{1, 0}, {1, 2}};
    });
    F.check("q-vs-z-integral", [&] { return indecomposables(G, S, DecompKind::integral).size() == 3; });
    // alpha = alpha2 (short), beta = alpha1 (long), <beta, alpha^vee> = -2
    const auto& w0 = G.longest_element();
    WeylElt w = G.multiply(w0, F.W("2,1,2"));
    F.check("two-root-curves", [&] {
        return set_of(curve_weights(G, w0, w, {})) == std::set<Root>{{0, 1}, {1, 0}, {1, 2}};
    });
    F.check("bc2-tangent", [&] {
        auto t = tangent_weights(G, w0, w, {});
        return t.roots && t.provenance == "bc2-rank2" && set_of(*t.roots) == std::set<Root>{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    });
    F.check("D3-singular-rationally-smooth", [&] {
        auto R = weight_report(G, w0, w, {});
        return R.dim_x == 3 && R.phi_tan->size() == 4 && R.smooth == false && R.rationally_smooth;
    });
    F.check("w0-is-minus-one", [&] {
        for (const auto& r : rs.all_roots())
            if (G.apply(w0, r) != -r) return false;
        return true;
    });
}

void fixtures_c2(Fixtures& F) {
    const auto& G = F.G;
    // alpha = alpha1 (short), beta = alpha2 (long)
    const auto& w0 = G.longest_element();
    WeylElt w = G.multiply(w0, F.W("1,2,1"));
    F.check("two-root-curves-C2", [&] {
        return set_of(curve_weights(G, w0, w, {})) == std::set<Root>{{1, 0}, {0, 1}, {2, 1}};
    });
    F.check("bc2-tangent-C2", [&] {
        auto t = tangent_weights(G, w0, w, {});
        return t.roots && t.provenance == "bc2-rank2" && set_of(*t.roots) == std::set<Root>{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    });
}

void fixtures_typeD(Fixtures& F, const std::vector<std::pair<int, int>>& abs) {
    const auto& G = F.G;
    const auto& rs = F.rs;
    const int n = rs.rank();
    const auto& w0 = G.longest_element();
    auto eps = [&](int i, int si, int j, int sj) {
        std::vector<int> e(n, 0);
        e[i - 1] += si;
        e[j - 1] += sj;
        return rs.from_epsilon(e);
    };
    for (auto [a, b] : abs) {
        const std::string tag = "-" + std::to_string(a) + std::to_string(b);
        WeylElt w = G.multiply(u_ab(G, a, b), w0);
        F.check("typeD-a" + tag, [&] {
            std::set<Root> expect;
            for (int i = 1; i < n - 1; ++i)
                for (int j = i + 1; j < n - 1; ++j)
                    if (i >= a && j >= b) expect.insert(eps(i, 1, j, 1));
            return set_of(phi_oth_typeD(G, w)) == expect;
        });
        F.check("typeD-b" + tag, [&] {
            auto cur = set_of(curve_weights(G, w0, w, {}));
            for (int i = 1; i < n - 1; ++i)
                for (int j = i + 1; j < n - 1; ++j) {
                    if (i < a || j < b) continue;
                    for (int s : {1, -1})
                        if (!cur.count(eps(i, 1, n - 1, s)) || !cur.count(eps(j, 1, n - 1, s))) return false;
                }
            return true;
        });
        F.check("typeD-c" + tag, [&] {
            auto t = tangent_weights(G, w0, w, {});
            if (!t.roots || t.provenance != "lakshmibai-D-w0") return false;
            auto cur = curve_weights(G, w0, w, {});
            auto cs = set_of(cur);
            std::set<Root> joined = cs;
            for (const auto& g : *t.other) {
                if (cs.count(g)) return false;
                joined.insert(g);
            }
            // at w0 every weight is positive
            return joined == set_of(*t.roots) && cone_contains(*t.roots, cur, false) && cone_contains(*t.roots, cur, true);
        });
    }
}

void fixtures_d4(Fixtures& F) {
    const auto& G = F.G;
    const auto& rs = F.rs;
    WeylElt x = F.W("2,1,3,4,2");
    F.check("u12-length", [&] { return G.length(x) == 5 && G.is_reduced({2, 1, 3, 4, 2}); });
    F.check("u12-fully-commutative", [&] {
        return G.is_fully_commutative(x) &&
               BigInt(static_cast<unsigned long>(G.commutation_class_size({2, 1, 3, 4, 2}))) == G.count_reduced_words(x);
    });
    F.check("u12-not-cominuscule", [&] { return !is_cominuscule_elt(G, x); });
    F.check("u12-integrally-indecomposable", [&] {
        auto S = weighted_set(G, inversion_table(G, {2, 1, 3, 4, 2}));
        return indecomposables(G, S, DecompKind::integral).size() == S.size();
    });
    F.check("u12-signed", [&] {
        return to_signed_permutation(G, u_ab(G, 1, 2)) == SignedPermutation{-1, -3, -2, -4};
    });
    F.check("tangent-w12", [&] {
        const auto& w0 = G.longest_element();
        WeylElt w = G.multiply(u_ab(G, 1, 2), w0);
        auto t = tangent_weights(G, w0, w, {});
        auto cur = set_of(curve_weights(G, w0, w, {}));
        cur.insert(rs.parse_root("e1+e2"));
        return t.roots && set_of(*t.roots) == cur && t.other &&
               set_of(*t.other) == std::set<Root>{rs.parse_root("e1+e2")};
    });
    fixtures_typeD(F, {{1, 2}});
}

void fixtures_any(Fixtures& F) {
    const auto& G = F.G;
    const auto& rs = F.rs;
    F.check("positive-count", [&] { return static_cast<std::size_t>(rs.num_positive()) == expected_positive_count(rs.spec()); });
    F.check("equivs-simple", [&] {
        auto phi = validate_root_set(rs, rs.positive_roots());
        std::set<Root> simple;
        for (int i = 0; i < rs.rank(); ++i) simple.insert(rs.simple_root(i));
        bool ok = set_of(indecomposables(G, phi, DecompKind::rational).elements) == simple &&
                  set_of(indecomposables(G, phi, DecompKind::iso).elements) == simple;
        if (rs.is_simply_laced()) ok = ok && set_of(indecomposables(G, phi, DecompKind::integral).elements) == simple;
        return ok;
    });
}

void suite_fixtures(const WeylGroup& G, const SuiteConfig&, SuiteReport& rep) {
    Fixtures F(G, rep);
    const auto& spec = G.roots().spec();
    fixtures_any(F);
    if (spec == RootSystemSpec{'A', 2}) fixtures_a2(F);
    if (spec == RootSystemSpec{'B', 2}) fixtures_b2(F);
    if (spec == RootSystemSpec{'C', 2}) fixtures_c2(F);
    if (spec == RootSystemSpec{'D', 4}) fixtures_d4(F);
    if (spec == RootSystemSpec{'D', 5}) fixtures_typeD(F, {{1, 2}, {2, 3}, {1, 3}});
}

using SuiteFn = void (*)(const WeylGroup&, const SuiteConfig&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"paper-examples", suite_fixtures},
        {"reduced-iso", suite_reduced_iso},
        {"demazure", suite_demazure},
        {"cones", suite_cones},
        {"classical-indec", suite_classical_indec},
        {"allin", suite_allin},
        {"main", suite_main},
        {"smooth", suite_smooth},
        {"character", suite_character},
        {"exceptional-explore", suite_exceptional},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, f] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const RootSystemSpec& spec, const SuiteConfig& cfg) {
    SuiteFn fn = nullptr;
    for (const auto& [n, f] : registry())
        if (n == name) fn = f;
    if (!fn) {
        std::string all;
        for (const auto& n : suite_names()) all += (all.empty() ? "" : ", ") + n;
        throw Error("unknown suite '" + name + "'; expected one of: " + all);
    }
    WeylGroup G(spec);
    G.check_guard(cfg.max_order);
    SuiteReport rep;
    rep.suite = name;
    rep.type = G.name();
    rep.config = cfg;
    auto t0 = std::chrono::steady_clock::now();
    fn(G, cfg, rep);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

json report_json(const SuiteReport& r) {
    json j;
    j["schema_version"] = 1;
    j["suite"] = r.suite;
    j["type"] = r.type;
    j["checked"] = r.checked;
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"instance", x.instance}, {"what", x.what}});
    j["violations"] = v;
    j["seed"] = r.config.seed;
    j["elapsed_ms"] = r.elapsed_ms;
    j["counters"] = r.counters;
    json c;
    c["samples"] = r.config.samples;
    c["jobs"] = r.config.jobs;
    c["word_length"] = r.config.word_length;
    c["height_bound"] = r.config.height_bound;
    c["max_order"] = r.config.max_order ? json(*r.config.max_order) : json(nullptr);
    j["config"] = c;
    return j;
}

}  // namespace schubcone
