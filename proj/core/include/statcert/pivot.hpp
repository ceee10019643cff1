#ifndef STATCERT_PIVOT_HPP
#define STATCERT_PIVOT_HPP

#include <optional>
#include <string>
#include <vector>

#include "statcert/multipliers.hpp"

namespace statcert {

/// Rank of the full active-gradient family at the point.
long rank_r(const MpecPoint& P);

/**
 * An MPEC working set: active inequality indices J_g, pair indices J_G
 * (pairs with the G row in the basis) and J_H.  Validity requires
 * J_G union J_H = all pairs, |J_g| + p + |J_G| + |J_H| = rank_r, and an
 * independent gradient family; construct() checks all of it.
 */
struct WorkingSet {
  std::vector<long> J_g, J_G, J_H;

  static WorkingSet construct(const MpecPoint& P, std::vector<long> J_g,
                              std::vector<long> J_G, std::vector<long> J_H);

  friend bool operator==(const WorkingSet& a, const WorkingSet& b) {
    return a.J_g == b.J_g && a.J_G == b.J_G && a.J_H == b.J_H;
  }
};

/// First valid working set in deterministic search order, if any exists.
std::optional<WorkingSet> find_initial_working_set(const MpecPoint& P);

/**
 * The unique multiplier supported on the working set with Lagrangian
 * stationarity at lambda0 = 1, as a full stacked vector.
 * Throws NotRepresentableError when grad f leaves the span.
 */
RVector lambda_of(const MpecPoint& P, const WorkingSet& J);

/// Exact strong M-stationarity certificate check.
bool verify_strong_m(const MpecPoint& P, const WorkingSet& J, const RVector& lambda);

/**
 * Right-hand-side perturbation: positive on the free active-inequality
 * components, negative on the free biactive-pair components, zero on the
 * initial working set.  Indexed by original constraint index.
 */
struct Perturbation {
  RVector bg;  // size l, nonzero only on act_g minus initial J_g
  RVector bG;  // size q, nonzero only on zero_zero minus initial J_G
  RVector bH;  // size q, nonzero only on zero_zero minus initial J_H
};

struct PivotCycle {
  WorkingSet J;
  RVector lambda;
  // drop block: 0 = inequality, 1 = pair G side, 2 = pair H side
  int drop_block = -1;
  long drop_index = -1;
  RVector d;
  // entering block uses the same encoding; absent on the final cycle
  std::optional<int> enter_block;
  std::optional<long> enter_index;
  std::optional<Rational> step;
  RVector u_after;
};

struct PivotOutcome {
  enum class Kind { StronglyM, DescentDirection };
  Kind kind = Kind::StronglyM;
  WorkingSet J;                      // certificate working set
  RVector lambda;                    // certificate multiplier
  std::optional<RVector> descent;    // direction with grad f . d = -1
  std::vector<PivotCycle> trace;
  Perturbation b;                    // the perturbation the run ended with
  int redraws = 0;
};

/**
 * Active-set pivoting from the given working set.  Degenerate behavior
 * under the current perturbation (tied ratio test, zero step, tight-set
 * mismatch) triggers a redraw of b, at most 32 times, then a
 * DegenerateInputError.
 */
PivotOutcome pivot(const MpecPoint& P, const WorkingSet& J0, unsigned long long seed);

/// Same cycle with a caller-fixed perturbation; degeneracy is an error.
PivotOutcome pivot_with_b(const MpecPoint& P, const WorkingSet& J0, const Perturbation& b);

}  // namespace statcert

#endif
