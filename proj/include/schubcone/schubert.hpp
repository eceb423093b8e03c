#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schubcone/decomp.hpp"
#include "schubcone/rootset.hpp"

namespace schubcone {

// J as 1-based simple indices; empty means the Borel
using Levi = std::vector<int>;

// roots whose support lies inside J
bool in_levi(const Root& r, const Levi& J);

// x Phi_P^- = {x(rho) : rho in Phi^- \ Phi_J}; x must be in W^J
std::vector<Root> ambient_weights(const WeylGroup& G, const WeylElt& x, const Levi& J);

// {a in x Phi_P^- : s_a x >= w}; needs w <= x, both in W^J
std::vector<Root> curve_weights(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J);

// {gamma_i : x_i >= w}
std::vector<Root> kl_curve_weights(const WeylGroup& G, const InversionTable& T, const WeylElt& w);
// {gamma_i : z_i >= w}
std::vector<Root> kl_demazure_upper(const WeylGroup& G, const InversionTable& T, const WeylElt& w);

// type D only: s_{e_a-e_n} s_{e_a+e_n} s_{e_b+e_{n-1}}, 1 <= a < b < n-1
WeylElt u_ab(const WeylGroup& G, int a, int b);
// type D, x = w0: e_i+e_j (i<j<n-1) with s_g w0 !>= w and u_ij w0 >= w
std::vector<Root> phi_oth_typeD(const WeylGroup& G, const WeylElt& w);

struct TangentWeights {
    std::optional<std::vector<Root>> roots;  // nullopt: not computable here
    std::string provenance;                  // "unknown" when roots is empty
    std::optional<std::vector<Root>> other;  // set only by the type D case
};

// Recognized cases in order: type A, the simply laced conditions
// (ii) (iii) (v) (vi), type D at w0, the doubly laced rank-2 pattern at w0.
// word must be a reduced word for x (lexmin when omitted).
TangentWeights tangent_weights(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J,
                               std::optional<Word> word = std::nullopt);

struct Coplanarity {
    bool coplanar = false;
    int sign = -1;             // the constant c in a(v) = c
    RationalVector functional;  // v, when coplanar
};
// solves a(v) = sign for every a in S, pairing in simple-root coordinates
Coplanarity coplanarity(const RootSystem& rs, const std::vector<Root>& S, int sign = -1);
bool is_coplanar(const RootSystem& rs, const std::vector<Root>& S);

bool is_cominuscule_elt(const WeylGroup& G, const WeylElt& x);
// J omits exactly one node whose coefficient in the highest root is 1
bool is_cominuscule_parabolic(const RootSystem& rs, const Levi& J);
// no three roots a, b, a+b in S
bool has_sum_triple(const RootSystem& rs, const std::vector<Root>& S);

// which comin-char condition holds, checked in the order ii, iii, v, vi;
// nullopt outside simply laced types or when none holds
std::optional<std::string> comin_char_condition(const WeylGroup& G, const WeylElt& x, const Levi& J);

// undetermined (nullopt) when the KL tangent weights are not computable
std::optional<bool> is_kl_cominuscule_point(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J);

struct WeightReport {
    WeylElt x, w;
    Levi levi;
    Word word;  // reduced word for x used for the subexpression count
    std::vector<Root> phi_cur;
    std::vector<Root> phi_cur_kl;
    std::optional<std::vector<Root>> phi_tan;
    std::string provenance;
    std::optional<std::vector<Root>> phi_oth;
    int dim_x = 0;  // dim X^w
    int dim_y = 0;  // dim Y_x^w
    bool rationally_smooth = false;
    std::optional<bool> smooth;
    BigInt reduced_subexpressions;
    // "simply-laced" when the comin-char gate applies, "cominuscule-parabolic"
    // when only the parabolic criterion does, empty otherwise
    std::string subexpression_criterion;
    bool fully_commutative_x = false;
    bool cominuscule_x = false;
    bool cominuscule_p = false;
    bool coplanar_inversion = false;
};

WeightReport weight_report(const WeylGroup& G, const WeylElt& x, const WeylElt& w, const Levi& J,
                           std::optional<Word> word = std::nullopt);

// signed character of the tangent cone, truncated at height_bound. Keyed by
// zeta; the term is coefficient * e^{-zeta}.
std::map<Root, BigInt> kl_character_truncated(const WeylGroup& G, const InversionTable& T, const WeylElt& w,
                                              int height_bound);

// w0 w
WeylElt opposite_translate(const WeylGroup& G, const WeylElt& w);

}  // namespace schubcone
