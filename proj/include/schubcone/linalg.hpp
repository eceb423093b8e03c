#pragma once

#include <optional>

#include "schubcone/rational.hpp"

namespace schubcone {

// One exact solution of A x = b (free variables set to 0), or nullopt if the
// system is inconsistent. A is m x n given by rows.
std::optional<RationalVector> solve_linear(const RationalMatrix& A, const RationalVector& b);

int matrix_rank(RationalMatrix A);

// Feasibility of { x >= 0 : A x = b } by phase-1 simplex with Bland's rule.
// Infeasible systems come with z such that A^T z >= 0 and b.z < 0.
struct LpResult {
    bool feasible = false;
    RationalVector solution;
    RationalVector farkas;
};

LpResult solve_nonnegative(const RationalMatrix& A, const RationalVector& b);

}  // namespace schubcone
