#ifndef STATCERT_ORACLE_HPP
#define STATCERT_ORACLE_HPP

#include <optional>

#include "statcert/problem.hpp"

namespace statcert {

struct OracleResult {
  bool found = false;
  RVector x;
  // exact objective value at x; absent when the abspow term is irrational there
  std::optional<Rational> f_value;
};

/// Exact feasibility of x under the symbolic data (signs of abspow terms
/// are decided on squared forms, never in floating point).
bool symbolic_feasible(const Problem& p, const RVector& x);

/// Feasible and f(x) < f at the candidate point.
bool symbolic_descent(const Problem& p, const RVector& x);

/**
 * Scan the grid {x_bar + (k/resolution) * radius * e, k in [-resolution,
 * resolution]^n} in order of increasing |k|_1 with lexicographic
 * tie-breaking, and return the first exactly feasible point with a smaller
 * objective value.  A miss is only "no counterexample at this resolution",
 * never a minimality proof.  Throws UnavailableError without a symbolic
 * block, InputError on a nonpositive radius or resolution.
 */
OracleResult grid_oracle(const Problem& p, const Rational& radius, long resolution);

/// Same scan restricted to the ray x_bar + (k/resolution) * radius * d, k >= 1.
OracleResult probe_direction(const Problem& p, const RVector& d, const Rational& radius,
                             long resolution);

}  // namespace statcert

#endif
