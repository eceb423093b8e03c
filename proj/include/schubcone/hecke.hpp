#pragma once

#include <vector>

#include "schubcone/weyl.hpp"

namespace schubcone {

// H_u H_s = H_{us} if l(us) > l(u), else H_u
WeylElt demazure_step(const WeylGroup& G, const WeylElt& u, int s);
WeylElt demazure_product(const WeylGroup& G, const Word& q);

// group elements obtained as products of subsequences of q
std::vector<WeylElt> subexpression_products(const WeylGroup& G, const Word& q);
bool subexpression_exists(const WeylGroup& G, const Word& q, const WeylElt& u);

// index subsequences of q that are reduced words for w
BigInt count_reduced_subexpressions(const WeylGroup& G, const Word& q, const WeylElt& w);

struct HeckeSubexpression {
    std::vector<int> positions;  // 1-based, ascending
    int excess = 0;              // e(t) = m - l(w)
};

// all subsequences whose Demazure product is w, sorted lexicographically
std::vector<HeckeSubexpression> enumerate_hecke_subexpressions(const WeylGroup& G, const Word& q, const WeylElt& w);

}  // namespace schubcone
