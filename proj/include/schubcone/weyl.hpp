#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schubcone/rational.hpp"
#include "schubcone/rootsys.hpp"

namespace schubcone {

// 1-based simple reflection indices
using Word = std::vector<int>;

// "1,2,1", "1 2 1"; "" / "e" / "[]" give the empty word
Word parse_word(const std::string& text);
std::string format_word(const Word& w);    // "1,2,1", empty -> ""
std::string display_word(const Word& w);   // "s1s2s1", empty -> "e"

// Stored as the permutation it induces on root indices; this is determined by
// (and determines) the images of the simple roots.
class WeylElt {
 public:
    WeylElt() = default;

    const std::vector<std::uint16_t>& perm() const { return perm_; }
    int operator()(int root_idx) const { return perm_[root_idx]; }

    bool operator==(const WeylElt& o) const { return perm_ == o.perm_; }
    bool operator<(const WeylElt& o) const { return perm_ < o.perm_; }

 private:
    friend class WeylGroup;
    explicit WeylElt(std::vector<std::uint16_t> p) : perm_(std::move(p)) {}
    std::vector<std::uint16_t> perm_;
};

struct WeylEltHash {
    std::size_t operator()(const WeylElt& w) const noexcept;
};

class WeylGroup {
 public:
    explicit WeylGroup(const RootSystemSpec& spec);
    explicit WeylGroup(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    std::string name() const { return rs_.name(); }

    WeylElt identity() const { return id_; }
    WeylElt simple(int i) const;  // 1-based
    WeylElt from_word(const Word& q) const;
    WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
    WeylElt inverse(const WeylElt& a) const;
    WeylElt times_simple(const WeylElt& w, int i) const;  // w s_i
    WeylElt simple_times(int i, const WeylElt& w) const;  // s_i w

    int apply_index(const WeylElt& w, int root_idx) const { return w(root_idx); }
    // linear action on any lattice vector
    Root apply(const WeylElt& w, const Root& v) const;

    int length(const WeylElt& w) const;
    bool is_right_descent(const WeylElt& w, int i) const;  // l(w s_i) < l(w)
    bool is_left_descent(const WeylElt& w, int i) const;   // l(s_i w) < l(w)
    std::vector<int> right_descents(const WeylElt& w) const;
    std::vector<int> left_descents(const WeylElt& w) const;

    std::vector<Root> simple_images(const WeylElt& w) const;
    // throws unless the images extend to an automorphism of the root system
    WeylElt from_simple_images(const std::vector<Root>& images) const;

    Word lexmin_reduced_word(const WeylElt& w) const;
    bool is_reduced(const Word& q) const;
    BigInt count_reduced_words(const WeylElt& w) const;
    // throws on a non-reduced word
    std::size_t commutation_class_size(const Word& q) const;
    bool is_fully_commutative(const WeylElt& w) const;

    bool bruhat_leq(const WeylElt& u, const WeylElt& w) const;

    const WeylElt& longest_element() const { return w0_; }
    WeylElt longest_parabolic(const std::vector<int>& J) const;
    bool is_minimal_rep(const WeylElt& w, const std::vector<int>& J) const;

    // reflection in +-root
    const WeylElt& reflection(int root_idx) const;
    const WeylElt& reflection(const Root& r) const { return reflection(rs_.index_of(r)); }

    int coxeter_m(int i, int j) const;  // 1-based

    // Elements sorted by (length, lexmin word). Throws GuardExceeded when the
    // order exceeds max_order (default: default_max_order()).
    std::vector<WeylElt> elements(std::optional<std::uint64_t> max_order = std::nullopt) const;
    // minimal coset representatives W^J, same ordering
    std::vector<WeylElt> minimal_reps(const std::vector<int>& J,
                                      std::optional<std::uint64_t> max_order = std::nullopt) const;
    BigInt order() const;

    // SCHUBCONE_MAX_GROUP_ORDER overrides 10^6
    static std::uint64_t default_max_order();
    void check_guard(std::optional<std::uint64_t> max_order) const;

    // random reduced word obtained by stripping random left descents
    template <class Rng>
    Word random_reduced_word(const WeylElt& w, Rng& rng) const {
        Word out;
        WeylElt v = inverse(w);
        for (;;) {
            std::vector<int> d;
            for (int i = 1; i <= rank(); ++i)
                if (!rs_.is_positive_index(v(rs_.simple_index(i - 1)))) d.push_back(i);
            if (d.empty()) break;
            int i = d[rng() % d.size()];
            out.push_back(i);
            v = times_simple(v, i);
        }
        return out;
    }

    std::string format(const WeylElt& w) const { return format_word(lexmin_reduced_word(w)); }
    std::string display(const WeylElt& w) const { return display_word(lexmin_reduced_word(w)); }

 private:
    void init();

    RootSystem rs_;
    WeylElt id_;
    WeylElt w0_;
    std::vector<WeylElt> simples_;
    std::vector<WeylElt> reflections_;  // indexed by positive root index
};

}  // namespace schubcone
