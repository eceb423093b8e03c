#pragma once

#include <optional>
#include <vector>

#include "schubcone/rational.hpp"
#include "schubcone/weyl.hpp"

namespace schubcone {

struct InversionTable {
    Word word;
    WeylElt x;
    std::vector<Root> gammas;        // gamma_i = s_1...s_{i-1}(alpha_{q_i})
    std::vector<WeylElt> coxeters;   // x_i: product with letter i deleted
    std::vector<WeylElt> demazures;  // z_i: Demazure product with letter i deleted

    int size() const { return static_cast<int>(word.size()); }
};

// throws on a non-reduced word
InversionTable inversion_table(const WeylGroup& G, const Word& q);

// I(x^{-1}) = {a > 0 : x^{-1} a < 0}, in root-index order
std::vector<Root> inversion_set(const WeylGroup& G, const WeylElt& x);

enum class WeightKind { none, coxeter, demazure };
const char* to_string(WeightKind k);
WeightKind parse_weight_kind(const std::string& s);

struct WeightedRootSet {
    std::vector<Root> elements;
    std::optional<std::vector<WeylElt>> coxeter_weight;
    std::optional<std::vector<WeylElt>> demazure_weight;
    RationalVector witness;  // <witness, a> > 0 on every element

    int size() const { return static_cast<int>(elements.size()); }
    int find(const Root& r) const;  // -1 if absent
    bool contains(const Root& r) const { return find(r) >= 0; }
    // nullptr for WeightKind::none; throws if the map is missing
    const std::vector<WeylElt>* weights(WeightKind kind) const;
};

// S = I(x^{-1}) in word order, with both weight maps
WeightedRootSet weighted_set(const WeylGroup& G, const InversionTable& T);

// elements whose selected weight is >= w
WeightedRootSet restrict_geq(const WeylGroup& G, const WeightedRootSet& S, WeightKind kind, const WeylElt& w);

// a subset keeping weights and witness
WeightedRootSet subset(const WeightedRootSet& S, const std::vector<int>& keep);

// Checks the root-set axioms. Throws Error with the offending pair or the
// certificate (nonnegative combination summing to 0) when they fail.
WeightedRootSet validate_root_set(const RootSystem& rs, const std::vector<Root>& roots);

// Papi-style closedness; S must be inside the positive roots
bool is_closed(const RootSystem& rs, const std::vector<Root>& S);

// true if a and b are proportional (and nonzero)
bool proportional(const Root& a, const Root& b);

// r, s with v = r a + s b, if any (a, b not proportional)
std::optional<std::pair<Rational, Rational>> solve_pair(const Root& v, const Root& a, const Root& b);

}  // namespace schubcone
