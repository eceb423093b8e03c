#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace schubcone {

using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// "p/q", or "p" when q = 1
inline std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& s);

}  // namespace schubcone
