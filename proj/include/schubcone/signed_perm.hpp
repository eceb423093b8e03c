#pragma once

#include <string>
#include <vector>

#include "schubcone/weyl.hpp"

namespace schubcone {

// u_1 ... u_n with w(e_i) = sign(u_i) e_{|u_i|}. Type A_{n-1} uses plain
// permutations of 1..n.
using SignedPermutation = std::vector<int>;

SignedPermutation parse_signed_permutation(const std::string& text);
std::string format_signed_permutation(const SignedPermutation& u);

// classical types only
SignedPermutation to_signed_permutation(const WeylGroup& G, const WeylElt& w);
WeylElt from_signed_permutation(const WeylGroup& G, const SignedPermutation& u);

// Tableau criteria, independent of the root-system Bruhat test.
// Type A: rank matrices of permutations. Types B/C: rank matrices of the
// embedding into permutations of 1<..<n<-n<..<-1. Throws for type D.
bool proctor_leq(const WeylGroup& G, const SignedPermutation& u, const SignedPermutation& v);
// the B-type rank condition; necessary (not sufficient) for Bruhat order in type D
bool signed_rank_leq(const SignedPermutation& u, const SignedPermutation& v);
bool permutation_rank_leq(const std::vector<int>& u, const std::vector<int>& v);

}  // namespace schubcone
