#include "schubcone/linalg.hpp"

#include <algorithm>

#include "schubcone/errors.hpp"

namespace schubcone {

namespace {

// reduced row echelon form in place on the augmented matrix; returns pivot columns
std::vector<int> rref(RationalMatrix& M, int ncols) {
    std::vector<int> pivots;
    int rows = static_cast<int>(M.size());
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(M[i][c]) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[r]);
        Rational inv = 1 / M[r][c];
        for (auto& v : M[r]) v *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(M[i][c]) == 0) continue;
            Rational f = M[i][c];
            for (std::size_t k = 0; k < M[i].size(); ++k) M[i][k] -= f * M[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RationalVector> solve_linear(const RationalMatrix& A, const RationalVector& b) {
    int m = static_cast<int>(A.size());
    int n = m ? static_cast<int>(A[0].size()) : 0;
    RationalMatrix M(m, RationalVector(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = A[i][j];
        M[i][n] = b[i];
    }
    auto piv = rref(M, n);
    for (int i = static_cast<int>(piv.size()); i < m; ++i)
        if (sgn(M[i][n]) != 0) return std::nullopt;
    RationalVector x(n);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = M[r][n];
    return x;
}

int matrix_rank(RationalMatrix A) {
    if (A.empty()) return 0;
    return static_cast<int>(rref(A, static_cast<int>(A[0].size())).size());
}

LpResult solve_nonnegative(const RationalMatrix& A, const RationalVector& b) {
    const int m = static_cast<int>(b.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    LpResult res;
    if (m == 0) {
        res.feasible = true;
        res.solution.assign(n, 0);
        return res;
    }

    // tableau: columns 0..n-1 originals, n..n+m-1 artificials, last = rhs
    std::vector<int> rowsign(m, 1);
    RationalMatrix T(m, RationalVector(n + m + 1));
    for (int i = 0; i < m; ++i) {
        if (sgn(b[i]) < 0) rowsign[i] = -1;
        for (int j = 0; j < n; ++j) T[i][j] = rowsign[i] * A[i][j];
        T[i][n + i] = 1;
        T[i][n + m] = rowsign[i] * b[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    // reduced costs for min sum of artificials
    RationalVector rc(n + m + 1);
    for (int j = 0; j <= n + m; ++j) {
        Rational s = 0;
        for (int i = 0; i < m; ++i) s += T[i][j];
        rc[j] = (j >= n && j < n + m ? Rational(1) : Rational(0)) - s;
    }

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (sgn(rc[j]) < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (sgn(T[i][enter]) <= 0) continue;
            Rational ratio = T[i][n + m] / T[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // phase 1 is bounded below by 0, so a pivot row always exists
        check_invariant(leave >= 0, "phase-1 simplex unbounded");
        Rational inv = 1 / T[leave][enter];
        for (auto& v : T[leave]) v *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || sgn(T[i][enter]) == 0) continue;
            Rational f = T[i][enter];
            for (int k = 0; k <= n + m; ++k) T[i][k] -= f * T[leave][k];
        }
        Rational f = rc[enter];
        for (int k = 0; k <= n + m; ++k) rc[k] -= f * T[leave][k];
        basis[leave] = enter;
    }

    // objective value is -rc[rhs]
    Rational obj = -rc[n + m];
    if (sgn(obj) == 0) {
        res.feasible = true;
        res.solution.assign(n, 0);
        for (int i = 0; i < m; ++i)
            if (basis[i] < n) res.solution[basis[i]] = T[i][n + m];
        return res;
    }
    // y_i = 1 - rc[n+i] is the phase-1 dual; z = -D y
    res.farkas.resize(m);
    for (int i = 0; i < m; ++i) {
        Rational y = 1 - rc[n + i];
        res.farkas[i] = -rowsign[i] * y;
    }
    return res;
}

}  // namespace schubcone

namespace schubcone {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) throw Error("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace schubcone
