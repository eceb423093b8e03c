#include "schubcone/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "schubcone/errors.hpp"
#include "schubcone/linalg.hpp"

namespace schubcone {

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.size() < 2) throw Error("type string '" + text + "' must look like A3, D4, E8");
    RootSystemSpec s;
    s.family = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    std::string digits = t.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 3)
        throw Error("type string '" + text + "': rank must be a positive integer");
    s.rank = std::stoi(digits);
    validate_spec(s);
    return s;
}

void validate_spec(const RootSystemSpec& s) {
    const int n = s.rank;
    std::string name = s.name();
    switch (s.family) {
        case 'A':
            if (n < 1) throw Error(name + ": type A needs rank n >= 1");
            return;
        case 'B':
        case 'C':
            if (n < 2) throw Error(name + ": types B and C need rank n >= 2");
            return;
        case 'D':
            if (n < 4) throw Error(name + ": type D needs rank n >= 4 (D3 is A3, D2 is reducible)");
            return;
        case 'E':
            if (n < 6 || n > 8) throw Error(name + ": type E needs rank 6, 7 or 8");
            return;
        case 'F':
            if (n != 4) throw Error(name + ": type F exists only in rank 4");
            return;
        case 'G':
            if (n != 2) throw Error(name + ": type G exists only in rank 2");
            return;
        default:
            throw Error(name + ": family must be one of A,B,C,D,E,F,G");
    }
}

std::size_t expected_positive_count(const RootSystemSpec& s) {
    std::size_t n = s.rank;
    switch (s.family) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
    }
    return 0;
}

bool Root::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
    return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
    return !is_zero() && std::all_of(coords.begin(), coords.end(), [](int c) { return c <= 0; });
}

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (int i = 0; i < r.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    Root r = a;
    for (int i = 0; i < r.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

Root operator-(const Root& a) {
    Root r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

Root operator*(int k, const Root& a) {
    Root r = a;
    for (auto& c : r.coords) c *= k;
    return r;
}

int height(const Root& r) { return std::accumulate(r.coords.begin(), r.coords.end(), 0); }

std::size_t RootHash::operator()(const Root& r) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int c : r.coords) h = (h ^ static_cast<std::size_t>(c + 1024)) * 0x100000001b3ull;
    return h;
}

RootSystem::RootSystem(const RootSystemSpec& spec) : spec_(spec) {
    validate_spec(spec_);
    build_cartan();
    build_symmetrizer();
    build_roots();
    if (is_classical()) build_epsilon();
}

void RootSystem::build_cartan() {
    const int n = spec_.rank;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto bond = [&](int i, int j) {  // 1-based, simple bond
        cartan_[i - 1][j - 1] = -1;
        cartan_[j - 1][i - 1] = -1;
    };
    // a[i][j] = 2(a_i,a_j)/(a_i,a_i): the entry on the row of the short root is the big one
    auto multi = [&](int lng, int shrt, int m) {
        cartan_[lng - 1][shrt - 1] = -1;
        cartan_[shrt - 1][lng - 1] = -m;
    };
    switch (spec_.family) {
        case 'A':
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            break;
        case 'B':
            for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
            multi(n - 1, n, 2);  // alpha_n short
            break;
        case 'C':
            for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
            multi(n, n - 1, 2);  // alpha_n long
            break;
        case 'D':
            for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
            bond(n - 2, n);
            break;
        case 'E':
            bond(1, 3);
            bond(3, 4);
            bond(4, 5);
            bond(2, 4);
            for (int i = 5; i < n; ++i) bond(i, i + 1);
            break;
        case 'F':
            bond(1, 2);
            multi(2, 3, 2);
            bond(3, 4);
            break;
        case 'G':
            multi(2, 1, 3);  // alpha_1 short
            break;
    }
}

void RootSystem::build_symmetrizer() {
    const int n = spec_.rank;
    // d_i a_ij = d_j a_ji; propagate along the (connected) diagram
    std::vector<Rational> d(n, 0);
    d[0] = 1;
    std::deque<int> todo{0};
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop_front();
        for (int j = 0; j < n; ++j) {
            if (j == i || cartan_[i][j] == 0 || sgn(d[j]) != 0) continue;
            d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
            todo.push_back(j);
        }
    }
    BigInt l = 1;
    for (auto& x : d) {
        x.canonicalize();
        l = lcm(l, x.get_den());
    }
    BigInt g = 0;
    std::vector<BigInt> di(n);
    for (int i = 0; i < n; ++i) {
        Rational t = d[i] * l;
        di[i] = t.get_num();
        g = gcd(g, di[i]);
    }
    symmetrizer_.resize(n);
    for (int i = 0; i < n; ++i) symmetrizer_[i] = static_cast<int>(BigInt(di[i] / g).get_si());
    gram_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_[i][j] = symmetrizer_[i] * cartan_[i][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            check_invariant(gram_[i][j] == gram_[j][i], "symmetrized Cartan matrix is not symmetric");
}

void RootSystem::build_roots() {
    const int n = spec_.rank;
    auto simple_reflect = [&](int i, const Root& v) {
        int p = 0;
        for (int j = 0; j < n; ++j) p += v.coords[j] * cartan_[i][j];
        Root r = v;
        r.coords[i] -= p;
        return r;
    };
    std::unordered_map<Root, int, RootHash> seen;
    std::vector<Root> found;
    std::deque<Root> todo;
    for (int i = 0; i < n; ++i) {
        Root a(std::vector<int>(n, 0));
        a.coords[i] = 1;
        seen.emplace(a, 0);
        found.push_back(a);
        todo.push_back(a);
    }
    while (!todo.empty()) {
        Root v = todo.front();
        todo.pop_front();
        for (int i = 0; i < n; ++i) {
            Root r = simple_reflect(i, v);
            if (seen.count(r)) continue;
            seen.emplace(r, 0);
            found.push_back(r);
            todo.push_back(r);
        }
    }
    for (auto& r : found) {
        check_invariant(r.is_positive() || r.is_negative(), "root with mixed signs");
        if (r.is_positive()) positive_.push_back(r);
    }
    std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    check_invariant(positive_.size() == expected_positive_count(spec_),
                    name() + ": positive root count differs from the known value");
    check_invariant(positive_.size() * 2 == found.size(), "roots do not split into +/- halves");
    const int N = num_positive();
    all_ = positive_;
    for (int k = 0; k < N; ++k) all_.push_back(-positive_[k]);
    for (int k = 0; k < 2 * N; ++k) index_.emplace(all_[k], k);
    simple_refl_.assign(n, std::vector<int>(2 * N));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < 2 * N; ++k) simple_refl_[i][k] = index_.at(simple_reflect(i, all_[k]));
    // highest root: unique of maximal height
    if (N > 1)
        check_invariant(height(positive_[N - 1]) > height(positive_[N - 2]), "highest root not unique");
}

void RootSystem::build_epsilon() {
    const int n = spec_.rank;
    const int m = epsilon_dim();
    epsilon_.assign(m, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        // alpha_{i+1} = e_{i+1} - e_{i+2} by default
        if (i + 1 < m) {
            epsilon_[i][i] = 1;
            epsilon_[i + 1][i] = -1;
        }
    }
    int last = n - 1;
    switch (spec_.family) {
        case 'A':
            break;
        case 'B':
            for (int r = 0; r < m; ++r) epsilon_[r][last] = 0;
            epsilon_[n - 1][last] = 1;
            break;
        case 'C':
            for (int r = 0; r < m; ++r) epsilon_[r][last] = 0;
            epsilon_[n - 1][last] = 2;
            break;
        case 'D':
            for (int r = 0; r < m; ++r) epsilon_[r][last] = 0;
            epsilon_[n - 2][last] = 1;
            epsilon_[n - 1][last] = 1;
            break;
    }
    // the epsilon dot product must be proportional to the gram matrix
    long long num = 0, den = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long dot = 0;
            for (int r = 0; r < m; ++r) dot += epsilon_[r][i] * epsilon_[r][j];
            if (num == 0 && dot != 0) {
                num = gram_[i][j];
                den = dot;
            }
            check_invariant(gram_[i][j] * den == dot * num, "epsilon embedding does not match gram");
        }
}

std::optional<int> RootSystem::find(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootSystem::index_of(const Root& r) const {
    auto k = find(r);
    if (!k) throw Error(format(r) + " is not a root of " + name());
    return *k;
}

Root RootSystem::simple_root(int i) const { return positive_[i]; }

long long RootSystem::inner(const Root& a, const Root& b) const {
    const int n = rank();
    long long s = 0;
    for (int i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (int j = 0; j < n; ++j) s += static_cast<long long>(a.coords[i]) * gram_[i][j] * b.coords[j];
    }
    return s;
}

Rational RootSystem::coroot_pairing(const Root& b, const Root& a) const {
    long long aa = inner(a, a);
    if (aa == 0) throw Error("coroot of the zero vector");
    Rational q(static_cast<long>(2 * inner(b, a)), static_cast<long>(aa));
    q.canonicalize();
    return q;
}

Root RootSystem::reflect(const Root& mirror, const Root& v) const {
    if (mirror.is_zero()) throw Error("reflection in the zero vector");
    Rational c = coroot_pairing(v, mirror);
    c.canonicalize();
    if (c.get_den() != 1) throw Error("reflection leaves the root lattice; mirror is not a root");
    int k = static_cast<int>(c.get_num().get_si());
    return v - k * mirror;
}

bool RootSystem::is_simply_laced() const {
    char f = spec_.family;
    return f == 'A' || f == 'D' || f == 'E';
}

bool RootSystem::is_classical() const {
    char f = spec_.family;
    return f == 'A' || f == 'B' || f == 'C' || f == 'D';
}

int RootSystem::epsilon_dim() const {
    if (!is_classical()) throw Error(name() + ": epsilon coordinates exist only for classical types");
    return spec_.family == 'A' ? rank() + 1 : rank();
}

std::vector<int> RootSystem::to_epsilon(const Root& r) const {
    const int m = epsilon_dim();
    std::vector<int> e(m, 0);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i < rank(); ++i) e[row] += epsilon_[row][i] * r.coords[i];
    return e;
}

Root RootSystem::from_epsilon(const std::vector<int>& e) const {
    const int m = epsilon_dim();
    if (static_cast<int>(e.size()) != m)
        throw Error(name() + ": epsilon vector needs " + std::to_string(m) + " entries");
    RationalMatrix A(m, RationalVector(rank()));
    RationalVector b(m);
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i < rank(); ++i) A[r][i] = epsilon_[r][i];
        b[r] = e[r];
    }
    auto x = solve_linear(A, b);
    if (!x) throw Error("epsilon vector " + format_coords(e) + " is not in the span of the roots of " + name());
    Root out{std::vector<int>(rank())};
    for (int i = 0; i < rank(); ++i) {
        Rational v = (*x)[i];
        v.canonicalize();
        if (v.get_den() != 1)
            throw Error("epsilon vector " + format_coords(e) + " is not in the root lattice of " + name());
        out.coords[i] = static_cast<int>(v.get_num().get_si());
    }
    return out;
}

std::string RootSystem::epsilon_string(const Root& r) const {
    auto e = to_epsilon(r);
    std::string s;
    for (int k = 0; k < static_cast<int>(e.size()); ++k) {
        int c = e[k];
        if (c == 0) continue;
        if (c < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (std::abs(c) != 1) s += std::to_string(std::abs(c));
        s += "e" + std::to_string(k + 1);
    }
    return s.empty() ? "0" : s;
}

std::string format_coords(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string RootSystem::format(const Root& r) const { return format_coords(r.coords); }

Root RootSystem::parse_root(const std::string& text) const {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw Error("empty root");
    if (t.front() == '[') {
        if (t.back() != ']') throw Error("root '" + text + "': missing ']'");
        std::vector<int> v;
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stoi(item, &used));
                if (used != item.size()) throw Error("");
            } catch (...) {
                throw Error("root '" + text + "': bad integer '" + item + "'");
            }
        }
        if (static_cast<int>(v.size()) != rank())
            throw Error("root '" + text + "' has " + std::to_string(v.size()) + " coordinates, rank is " +
                        std::to_string(rank()));
        return Root(v);
    }
    // epsilon notation: sum of [+-][k]e<idx>
    std::vector<int> e(epsilon_dim(), 0);
    std::size_t p = 0;
    while (p < t.size()) {
        int sign = 1;
        if (t[p] == '+' || t[p] == '-') {
            sign = t[p] == '-' ? -1 : 1;
            ++p;
        }
        int coef = 1;
        std::size_t q = p;
        while (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q]))) ++q;
        if (q > p) coef = std::stoi(t.substr(p, q - p));
        p = q;
        if (p >= t.size() || (t[p] != 'e' && t[p] != 'E')) throw Error("root '" + text + "': expected e<k>");
        ++p;
        q = p;
        while (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q]))) ++q;
        if (q == p) throw Error("root '" + text + "': missing index after e");
        int k = std::stoi(t.substr(p, q - p));
        if (k < 1 || k > epsilon_dim()) throw Error("root '" + text + "': index e" + std::to_string(k) + " out of range");
        e[k - 1] += sign * coef;
        p = q;
    }
    return from_epsilon(e);
}

}  // namespace schubcone
