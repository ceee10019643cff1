#ifndef STATCERT_LINALG_HPP
#define STATCERT_LINALG_HPP

#include "statcert/rational.hpp"

#include <optional>
#include <vector>

namespace statcert {

struct EliminationResult {
    long rank = 0;
    /// Canonical kernel basis: one vector per free column, free entry set to 1.
    std::vector<RVector> nullspace;
    /// rank equals the number of rows supplied.
    bool independent = false;
};

/**
 * Exact rank and right-nullspace of the matrix whose rows are `rows`.
 * `dim` is only consulted when `rows` is empty (kernel = R^dim).
 */
EliminationResult rank_and_nullspace(const std::vector<RVector>& rows, Eigen::Index dim = 0);

/** Gauss-Jordan to reduced row echelon form; returns the pivot columns in order. */
std::vector<Eigen::Index> rref_in_place(RMatrix& m);

/**
 * One exact solution of A x = b with all free variables set to zero,
 * or nullopt when the system is inconsistent.
 */
std::optional<RVector> solve_particular(const RMatrix& a, const RVector& b);

bool rows_independent(const std::vector<RVector>& rows);

/**
 * Standard unit vectors extending the independent family `basis` to a basis
 * of R^n. Scanned in coordinate order, so the result is canonical.
 */
std::vector<RVector> complement_with_units(const std::vector<RVector>& basis, Eigen::Index n);

RMatrix stack_rows(const std::vector<RVector>& rows, Eigen::Index cols);

}  // namespace statcert

#endif
