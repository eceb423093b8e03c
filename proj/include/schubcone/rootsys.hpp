#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubcone/rational.hpp"

namespace schubcone {

struct RootSystemSpec {
    char family = 'A';  // one of A..G, upper case
    int rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const RootSystemSpec&) const = default;

    // "b3", "D4", ... ; throws Error on an inadmissible type
    static RootSystemSpec parse(const std::string& text);
};

// throws Error naming the violated constraint
void validate_spec(const RootSystemSpec& spec);

// Integer vector in simple-root coordinates. Also used for general lattice
// points (character weights), not only for roots.
struct Root {
    std::vector<int> coords;

    Root() = default;
    explicit Root(std::vector<int> c) : coords(std::move(c)) {}
    Root(std::initializer_list<int> c) : coords(c) {}

    int size() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[i]; }
    bool is_zero() const;
    // all coordinates >= 0 and not all zero
    bool is_positive() const;
    bool is_negative() const;

    bool operator==(const Root&) const = default;
    auto operator<=>(const Root&) const = default;
};

Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);
Root operator-(const Root& a);
Root operator*(int k, const Root& a);
int height(const Root& r);

struct RootHash {
    std::size_t operator()(const Root& r) const noexcept;
};

using IntMatrix = std::vector<std::vector<int>>;

class RootSystem {
 public:
    explicit RootSystem(const RootSystemSpec& spec);

    const RootSystemSpec& spec() const { return spec_; }
    std::string name() const { return spec_.name(); }
    int rank() const { return spec_.rank; }

    // a[i][j] = <alpha_j, alpha_i^vee>, 0-based
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }
    const IntMatrix& gram() const { return gram_; }

    int num_positive() const { return static_cast<int>(positive_.size()); }
    const std::vector<Root>& positive_roots() const { return positive_; }
    // positive roots have indices 0..N-1, negatives N..2N-1 with neg(k) = k+N
    int num_roots() const { return 2 * num_positive(); }
    const Root& root(int idx) const { return all_[idx]; }
    const std::vector<Root>& all_roots() const { return all_; }
    bool is_positive_index(int idx) const { return idx < num_positive(); }
    int negate_index(int idx) const {
        return idx < num_positive() ? idx + num_positive() : idx - num_positive();
    }
    // index of alpha_i (i is 0-based)
    int simple_index(int i) const { return i; }
    // s_i applied to root idx, i 0-based
    int reflect_index(int i, int idx) const { return simple_refl_[i][idx]; }

    std::optional<int> find(const Root& r) const;
    int index_of(const Root& r) const;  // throws if r is not a root
    bool is_root(const Root& r) const { return find(r).has_value(); }

    Root simple_root(int i) const;  // 0-based
    const Root& highest_root() const { return positive_.back(); }

    long long inner(const Root& a, const Root& b) const;
    long long norm_sq(const Root& a) const { return inner(a, a); }
    // <b, a^vee> = 2 (b,a)/(a,a)
    Rational coroot_pairing(const Root& b, const Root& a) const;
    // v - <v, mirror^vee> mirror; throws on a zero mirror
    Root reflect(const Root& mirror, const Root& v) const;

    bool is_simply_laced() const;
    bool is_classical() const;

    // epsilon view, classical types only
    int epsilon_dim() const;
    std::vector<int> to_epsilon(const Root& r) const;
    Root from_epsilon(const std::vector<int>& e) const;  // throws if not in the lattice
    std::string epsilon_string(const Root& r) const;

    std::string format(const Root& r) const;  // "[1,2]"
    // "[1,2]" or epsilon notation like "e1-e2", "2e3"
    Root parse_root(const std::string& text) const;

 private:
    void build_cartan();
    void build_symmetrizer();
    void build_roots();
    void build_epsilon();

    RootSystemSpec spec_;
    IntMatrix cartan_;
    std::vector<int> symmetrizer_;
    IntMatrix gram_;
    std::vector<Root> positive_;
    std::vector<Root> all_;
    std::unordered_map<Root, int, RootHash> index_;
    std::vector<std::vector<int>> simple_refl_;
    IntMatrix epsilon_;  // epsilon_dim x rank, column i is alpha_i
};

std::size_t expected_positive_count(const RootSystemSpec& spec);

std::string format_coords(const std::vector<int>& v);

}  // namespace schubcone
