#ifndef STATCERT_PROBLEM_HPP
#define STATCERT_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "statcert/mpec.hpp"

namespace statcert {

/// One monomial: coeff * prod_j x_j^powers[j], powers.size() = n.
struct PolyTerm {
  Rational coeff;
  std::vector<long> powers;
};

/**
 * Full symbolic form of one program function, for evaluation away from the
 * candidate point: a sparse polynomial plus at most one term
 * abspow_coeff * |x_i|^(3/2).  All corpus data fits this shape.
 */
struct SymbolicFunction {
  std::vector<PolyTerm> terms;
  std::optional<long> abspow_var;
  Rational abspow_coeff = 0;

  bool has_abspow() const { return abspow_var.has_value(); }
};

struct SymbolicProblem {
  SymbolicFunction f;
  std::vector<SymbolicFunction> g, h, G, H;
};

struct Problem {
  std::string name;  // optional label, empty when absent
  MpecPoint point;
  std::optional<SymbolicProblem> symbolic;
};

/// Exact polynomial part of the value at x (the abspow term excluded).
Rational poly_value(const SymbolicFunction& s, const RVector& x);

/// Full value at x, when the abspow term evaluates rationally there.
std::optional<Rational> symbolic_value(const SymbolicFunction& s, const RVector& x);

/**
 * Parse a problem file.  The point is validated for feasibility; every
 * rational must be written canonically; when a symbolic block is present
 * its exact value and gradient at the candidate point are checked against
 * the frozen local data wherever the abspow term evaluates rationally.
 * Throws InputError with a diagnostic on any violation.
 */
Problem parse_problem(const std::string& bytes);

/// Canonical serialization; parse(serialize(p)) reproduces p exactly.
std::string serialize_problem(const Problem& p);

}  // namespace statcert

#endif
