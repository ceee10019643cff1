#ifndef STATCERT_SECOND_ORDER_HPP
#define STATCERT_SECOND_ORDER_HPP

#include <optional>
#include <string>
#include <vector>

#include "statcert/multipliers.hpp"
#include "statcert/stationarity.hpp"

namespace statcert {

/**
 * The quadratic form u^T grad^2_x L(xbar, lambda0, lambda) u as an affine
 * function of the multiplier: value = lambda0 * f_term + c . lambda.
 * Coordinates listed in `missing` belong to non-affine functions without a
 * stored Hessian; their c entry is 0 and a consumer must prove the
 * multiplier vanishes there (or give up with an unavailable outcome).
 */
struct QuadraticFormSpec {
  RVector direction;
  RVector c;
  Rational f_term = 0;
  bool f_available = true;
  std::vector<long> missing;
};

QuadraticFormSpec quadratic_form_vector(const MpecPoint& P, const RVector& u);

enum class CheckStatus { Holds, Empty, SupNegative, Unavailable };

struct Lambda0Check {
  CheckStatus status = CheckStatus::Empty;
  std::optional<RVector> witness;
  std::optional<Rational> value;
};

/**
 * Second-order necessary condition along a critical direction: some
 * lambda0 in {0,1} must admit a multiplier with nonnegative form value.
 * When the direction carries a subregularity certificate the lambda0 = 1
 * check alone decides.  Violated means certified non-minimal.
 */
struct NecessaryVerdict {
  RVector u;
  enum class Outcome { Holds, Violated, Unavailable };
  Outcome outcome = Outcome::Unavailable;
  Lambda0Check with_lambda1;
  Lambda0Check with_lambda0;
  SubregCertificate subreg;
  bool lambda1_decisive = false;
  std::string note;
};

NecessaryVerdict necessary_so(const MpecPoint& P, const RVector& u);

/**
 * Sufficiency modes:
 *   Existence  per direction, some (lambda0, lambda) with lambda in the
 *              regular-variant directional set and form value > 0
 *              (set use_limiting for the limiting-variant reading);
 *   Uniform    requires every supplied direction to have a nonempty
 *              limiting directional set, then per-branch infima > 0;
 *   Ssosc      per direction, infimum of the form over the u = 0 limiting
 *              set > 0; carries a permanent non-sufficiency caveat.
 */
enum class SufficientMode { Existence, Uniform, Ssosc };

struct SufficientDirection {
  RVector u;
  enum class Outcome { Holds, Fails, Inapplicable, Unavailable };
  Outcome outcome = Outcome::Fails;
  std::optional<int> lambda0;
  std::optional<RVector> witness;
  std::optional<Rational> value;
  std::string note;
};

struct SufficientReport {
  SufficientMode mode = SufficientMode::Existence;
  bool use_limiting = false;
  std::vector<SufficientDirection> per_direction;
  bool all_hold = false;
  // Claimed only when every critical-cone branch is a single ray covered
  // by a holding supplied direction; never in Ssosc mode.
  bool essential_local_min = false;
  std::string global_note;
};

SufficientReport sufficient_so(const MpecPoint& P, const std::vector<RVector>& directions,
                               SufficientMode mode, bool use_limiting = false);

/**
 * Primal second-order witness search: a vector v compatible with the
 * second-order linearization of every selected tangent piece certifies
 * that the dual positivity condition fails.
 */
struct PrimalWitness {
  bool found = false;
  std::optional<RVector> v;
  std::vector<std::size_t> pieces;  // encoded-piece indices examined
};

PrimalWitness primal_curvature_witness(const MpecPoint& P, const RVector& u);

/**
 * The dual counterpart, computed independently: every tangent piece along
 * u admits a stationary multiplier pair with positive form value.  True
 * exactly when primal_curvature_witness finds nothing.
 */
bool piecewise_dual_positivity(const MpecPoint& P, const RVector& u);

}  // namespace statcert

#endif
