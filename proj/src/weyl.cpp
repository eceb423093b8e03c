#include "schubcone/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "schubcone/errors.hpp"

namespace schubcone {

Word parse_word(const std::string& text) {
    std::string t;
    for (char c : text) t += (c == ',' || c == ';' || c == '[' || c == ']') ? ' ' : c;
    std::string trimmed;
    for (char c : t)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "e") return {};
    // also accept "s1s2s1"
    if (trimmed.front() == 's' || trimmed.front() == 'S') {
        std::string u;
        for (char c : trimmed) u += (c == 's' || c == 'S') ? ' ' : c;
        t = u;
    }
    Word w;
    std::stringstream ss(t);
    std::string item;
    while (ss >> item) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (...) {
            throw Error("word '" + text + "': bad letter '" + item + "'");
        }
        if (used != item.size()) throw Error("word '" + text + "': bad letter '" + item + "'");
        w.push_back(v);
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

std::string display_word(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int i : w) s += "s" + std::to_string(i);
    return s;
}

std::size_t WeylEltHash::operator()(const WeylElt& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : w.perm()) h = (h ^ v) * 0x100000001b3ull;
    return h;
}

WeylGroup::WeylGroup(const RootSystemSpec& spec) : rs_(spec) { init(); }

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) { init(); }

void WeylGroup::init() {
    const int R = rs_.num_roots();
    std::vector<std::uint16_t> p(R);
    for (int k = 0; k < R; ++k) p[k] = static_cast<std::uint16_t>(k);
    id_ = WeylElt(p);
    for (int i = 0; i < rank(); ++i) {
        for (int k = 0; k < R; ++k) p[k] = static_cast<std::uint16_t>(rs_.reflect_index(i, k));
        simples_.push_back(WeylElt(p));
    }
    const int N = rs_.num_positive();
    for (int r = 0; r < N; ++r) {
        const Root& g = rs_.root(r);
        for (int k = 0; k < R; ++k) p[k] = static_cast<std::uint16_t>(rs_.index_of(rs_.reflect(g, rs_.root(k))));
        reflections_.push_back(WeylElt(p));
    }
    WeylElt w = id_;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 1; i <= rank(); ++i)
            if (!is_right_descent(w, i)) {
                w = times_simple(w, i);
                grew = true;
            }
    }
    w0_ = w;
    check_invariant(length(w0_) == rs_.num_positive(), "longest element has wrong length");
}

WeylElt WeylGroup::simple(int i) const {
    if (i < 1 || i > rank()) throw Error("letter " + std::to_string(i) + " out of range [1," + std::to_string(rank()) + "]");
    return simples_[i - 1];
}

WeylElt WeylGroup::from_word(const Word& q) const {
    for (int i : q)
        if (i < 1 || i > rank())
            throw Error("letter " + std::to_string(i) + " out of range [1," + std::to_string(rank()) + "] for " + name());
    WeylElt w = id_;
    for (int i : q) w = times_simple(w, i);
    return w;
}

WeylElt WeylGroup::multiply(const WeylElt& a, const WeylElt& b) const {
    std::vector<std::uint16_t> p(b.perm_.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = a.perm_[b.perm_[k]];
    return WeylElt(std::move(p));
}

WeylElt WeylGroup::inverse(const WeylElt& a) const {
    std::vector<std::uint16_t> p(a.perm_.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[a.perm_[k]] = static_cast<std::uint16_t>(k);
    return WeylElt(std::move(p));
}

WeylElt WeylGroup::times_simple(const WeylElt& w, int i) const {
    const auto& s = simples_[i - 1].perm_;
    std::vector<std::uint16_t> p(s.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = w.perm_[s[k]];
    return WeylElt(std::move(p));
}

WeylElt WeylGroup::simple_times(int i, const WeylElt& w) const {
    const auto& s = simples_[i - 1].perm_;
    std::vector<std::uint16_t> p(s.size());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = s[w.perm_[k]];
    return WeylElt(std::move(p));
}

Root WeylGroup::apply(const WeylElt& w, const Root& v) const {
    if (v.size() != rank()) throw Error("vector length differs from rank");
    Root out(std::vector<int>(rank(), 0));
    for (int k = 0; k < rank(); ++k) {
        if (v.coords[k] == 0) continue;
        const Root& img = rs_.root(w(rs_.simple_index(k)));
        for (int j = 0; j < rank(); ++j) out.coords[j] += v.coords[k] * img.coords[j];
    }
    return out;
}

int WeylGroup::length(const WeylElt& w) const {
    const int N = rs_.num_positive();
    int l = 0;
    for (int k = 0; k < N; ++k) l += w.perm_[k] >= N;
    return l;
}

bool WeylGroup::is_right_descent(const WeylElt& w, int i) const {
    return !rs_.is_positive_index(w(rs_.simple_index(i - 1)));
}

bool WeylGroup::is_left_descent(const WeylElt& w, int i) const {
    const int a = rs_.simple_index(i - 1);
    for (std::size_t k = 0; k < w.perm_.size(); ++k)
        if (w.perm_[k] == a) return !rs_.is_positive_index(static_cast<int>(k));
    return false;
}

std::vector<int> WeylGroup::right_descents(const WeylElt& w) const {
    std::vector<int> d;
    for (int i = 1; i <= rank(); ++i)
        if (is_right_descent(w, i)) d.push_back(i);
    return d;
}

std::vector<int> WeylGroup::left_descents(const WeylElt& w) const { return right_descents(inverse(w)); }

std::vector<Root> WeylGroup::simple_images(const WeylElt& w) const {
    std::vector<Root> out;
    for (int i = 0; i < rank(); ++i) out.push_back(rs_.root(w(rs_.simple_index(i))));
    return out;
}

WeylElt WeylGroup::from_simple_images(const std::vector<Root>& images) const {
    if (static_cast<int>(images.size()) != rank()) throw Error("need one image per simple root");
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            if (rs_.inner(images[i], images[j]) != rs_.gram()[i][j])
                throw Error("simple images do not preserve the inner product");
    const int R = rs_.num_roots();
    std::vector<std::uint16_t> p(R);
    std::vector<char> hit(R, 0);
    for (int k = 0; k < R; ++k) {
        Root img(std::vector<int>(rank(), 0));
        for (int i = 0; i < rank(); ++i) img = img + rs_.root(k).coords[i] * images[i];
        auto idx = rs_.find(img);
        if (!idx || hit[*idx]) throw Error("simple images do not extend to a permutation of the roots");
        hit[*idx] = 1;
        p[k] = static_cast<std::uint16_t>(*idx);
    }
    WeylElt g(p);
    // strip descents; what is left permutes the simple roots and must be trivial
    for (bool again = true; again;) {
        again = false;
        for (int i = 1; i <= rank(); ++i)
            if (is_right_descent(g, i)) {
                g = times_simple(g, i);
                again = true;
            }
    }
    if (!(g == id_)) throw Error("simple images define a diagram automorphism outside the Weyl group");
    return WeylElt(p);
}

Word WeylGroup::lexmin_reduced_word(const WeylElt& w) const {
    Word out;
    WeylElt v = inverse(w);
    for (;;) {
        int pick = 0;
        for (int i = 1; i <= rank(); ++i)
            if (is_right_descent(v, i)) {
                pick = i;
                break;
            }
        if (!pick) break;
        out.push_back(pick);
        v = times_simple(v, pick);
    }
    return out;
}

bool WeylGroup::is_reduced(const Word& q) const {
    WeylElt w = id_;
    for (int i : q) {
        if (i < 1 || i > rank()) throw Error("letter " + std::to_string(i) + " out of range");
        if (is_right_descent(w, i)) return false;
        w = times_simple(w, i);
    }
    return true;
}

BigInt WeylGroup::count_reduced_words(const WeylElt& w) const {
    std::unordered_map<WeylElt, BigInt, WeylEltHash> memo;
    std::function<BigInt(const WeylElt&)> rec = [&](const WeylElt& u) -> BigInt {
        if (u == id_) return 1;
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        BigInt s = 0;
        for (int i = 1; i <= rank(); ++i)
            if (is_right_descent(u, i)) s += rec(times_simple(u, i));
        memo.emplace(u, s);
        return s;
    };
    return rec(w);
}

int WeylGroup::coxeter_m(int i, int j) const {
    if (i == j) return 1;
    int p = rs_.cartan()[i - 1][j - 1] * rs_.cartan()[j - 1][i - 1];
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
    }
    throw InvariantViolation("bad Cartan product");
}

std::size_t WeylGroup::commutation_class_size(const Word& q) const {
    if (!is_reduced(q)) throw Error("commutation_class_size needs a reduced word; '" + format_word(q) + "' is not");
    std::set<Word> seen{q};
    std::deque<Word> todo{q};
    while (!todo.empty()) {
        Word cur = todo.front();
        todo.pop_front();
        for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
            if (cur[p] == cur[p + 1] || coxeter_m(cur[p], cur[p + 1]) != 2) continue;
            Word nxt = cur;
            std::swap(nxt[p], nxt[p + 1]);
            if (seen.insert(nxt).second) todo.push_back(nxt);
        }
    }
    return seen.size();
}

namespace {

bool has_braid_factor(const WeylGroup& G, const Word& q) {
    for (std::size_t p = 0; p + 1 < q.size(); ++p) {
        int a = q[p], b = q[p + 1];
        if (a == b) continue;
        int m = G.coxeter_m(a, b);
        if (m < 3 || p + m > q.size()) continue;
        bool ok = true;
        for (int k = 0; k < m && ok; ++k) ok = q[p + k] == (k % 2 ? b : a);
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool WeylGroup::is_fully_commutative(const WeylElt& w) const {
    if (rs_.is_simply_laced()) {
        // no alpha, beta, alpha+beta inside I(w^{-1})
        std::vector<char> inv(rs_.num_positive(), 0);
        WeylElt wi = inverse(w);
        const int N = rs_.num_positive();
        for (int k = 0; k < N; ++k) inv[k] = !rs_.is_positive_index(wi(k));
        for (int a = 0; a < N; ++a) {
            if (!inv[a]) continue;
            for (int b = a + 1; b < N; ++b) {
                if (!inv[b]) continue;
                auto s = rs_.find(rs_.root(a) + rs_.root(b));
                if (s && inv[*s]) return false;
            }
        }
        return true;
    }
    // commutation class of one reduced word, stop at the first braid factor
    Word q = lexmin_reduced_word(w);
    std::set<Word> seen{q};
    std::deque<Word> todo{q};
    while (!todo.empty()) {
        Word cur = todo.front();
        todo.pop_front();
        if (has_braid_factor(*this, cur)) return false;
        for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
            if (cur[p] == cur[p + 1] || coxeter_m(cur[p], cur[p + 1]) != 2) continue;
            Word nxt = cur;
            std::swap(nxt[p], nxt[p + 1]);
            if (seen.insert(nxt).second) todo.push_back(nxt);
        }
    }
    return true;
}

bool WeylGroup::bruhat_leq(const WeylElt& u0, const WeylElt& w0) const {
    // lifting property with a fixed descent of w; no branching
    WeylElt u = u0, w = w0;
    int lu = length(u), lw = length(w);
    for (;;) {
        if (lu == 0) return true;
        if (lu > lw) return false;
        if (lu == lw) return u == w;
        int i = 1;
        while (!is_right_descent(w, i)) ++i;
        if (is_right_descent(u, i)) {
            u = times_simple(u, i);
            --lu;
        }
        w = times_simple(w, i);
        --lw;
    }
}

WeylElt WeylGroup::longest_parabolic(const std::vector<int>& J) const {
    for (int j : J)
        if (j < 1 || j > rank()) throw Error("parabolic index " + std::to_string(j) + " out of range");
    WeylElt w = id_;
    for (bool grew = true; grew;) {
        grew = false;
        for (int j : J)
            if (!is_right_descent(w, j)) {
                w = times_simple(w, j);
                grew = true;
            }
    }
    return w;
}

bool WeylGroup::is_minimal_rep(const WeylElt& w, const std::vector<int>& J) const {
    for (int j : J) {
        if (j < 1 || j > rank()) throw Error("parabolic index " + std::to_string(j) + " out of range");
        if (is_right_descent(w, j)) return false;
    }
    return true;
}

const WeylElt& WeylGroup::reflection(int root_idx) const {
    if (root_idx < 0 || root_idx >= rs_.num_roots()) throw Error("root index out of range");
    if (!rs_.is_positive_index(root_idx)) root_idx = rs_.negate_index(root_idx);
    return reflections_[root_idx];
}

BigInt WeylGroup::order() const {
    const int n = rank();
    BigInt f = 1;
    auto fact = [](int k) {
        BigInt r = 1;
        for (int i = 2; i <= k; ++i) r *= i;
        return r;
    };
    switch (rs_.spec().family) {
        case 'A': return fact(n + 1);
        case 'B':
        case 'C':
            mpz_mul_2exp(f.get_mpz_t(), fact(n).get_mpz_t(), n);
            return f;
        case 'D':
            mpz_mul_2exp(f.get_mpz_t(), fact(n).get_mpz_t(), n - 1);
            return f;
        case 'E': return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
        case 'F': return 1152;
        case 'G': return 12;
    }
    return 0;
}

std::uint64_t WeylGroup::default_max_order() {
    if (const char* env = std::getenv("SCHUBCONE_MAX_GROUP_ORDER")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw Error(std::string("SCHUBCONE_MAX_GROUP_ORDER='") + env + "' is not a number");
        }
    }
    return 1000000;
}

void WeylGroup::check_guard(std::optional<std::uint64_t> max_order) const {
    std::uint64_t cap = max_order ? *max_order : default_max_order();
    BigInt ord = order();
    if (ord > BigInt(std::to_string(cap)))
        throw GuardExceeded("enumerating W(" + name() + ") needs " + ord.get_str() +
                            " elements, above the group-order guard " + std::to_string(cap));
}

std::vector<WeylElt> WeylGroup::elements(std::optional<std::uint64_t> max_order) const {
    check_guard(max_order);
    std::unordered_map<WeylElt, int, WeylEltHash> seen;
    std::vector<WeylElt> out{id_};
    seen.emplace(id_, 0);
    for (std::size_t k = 0; k < out.size(); ++k)
        for (int i = 1; i <= rank(); ++i) {
            WeylElt v = times_simple(out[k], i);
            if (seen.emplace(v, 0).second) out.push_back(v);
        }
    check_invariant(BigInt(static_cast<unsigned long>(out.size())) == order(), "enumerated order differs from formula");
    std::vector<std::pair<Word, std::size_t>> keys;
    keys.reserve(out.size());
    for (std::size_t k = 0; k < out.size(); ++k) keys.emplace_back(lexmin_reduced_word(out[k]), k);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<WeylElt> sorted;
    sorted.reserve(out.size());
    for (auto& k : keys) sorted.push_back(out[k.second]);
    return sorted;
}

std::vector<WeylElt> WeylGroup::minimal_reps(const std::vector<int>& J, std::optional<std::uint64_t> max_order) const {
    std::vector<WeylElt> out;
    for (auto& w : elements(max_order))
        if (is_minimal_rep(w, J)) out.push_back(w);
    return out;
}

}  // namespace schubcone
