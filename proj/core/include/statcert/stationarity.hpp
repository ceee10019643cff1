#ifndef STATCERT_STATIONARITY_HPP
#define STATCERT_STATIONARITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "statcert/multipliers.hpp"

namespace statcert {

/**
 * One generator of conv T_lin: a ray of some linearization branch cone,
 * tagged with the branch that produced it (the pair indices whose grad G
 * row was the equality) and whether it came from the lineality space.
 */
struct GeneratorRay {
  RVector u;
  std::vector<long> grad_G_zero;
  bool from_lineality = false;
};

struct GeneratorSet {
  std::vector<GeneratorRay> rays;
};

/// Deduplicated union of extreme rays and +/- lineality bases over all
/// linearization branch cones.
GeneratorSet generators_of_Tlin(const MpecPoint& P);

/**
 * Directional metric subregularity certificate for the constraint mapping
 * restricted to `subset`:
 *   Polyhedral   every subset member affine, subregular everywhere;
 *   FirstOrder   the abnormal directional multiplier set is empty;
 *   SecondOrder  the quadratic form is negative over the whole set
 *                (value = exact maximum over the normalized branches);
 *   None         inconclusive, never a disproof;
 *   Unavailable  a needed Hessian is missing.
 */
struct SubregCertificate {
  enum class Kind { Polyhedral, FirstOrder, SecondOrder, None, Unavailable };
  Kind kind = Kind::None;
  std::optional<Rational> value;
  std::optional<RVector> witness;  // full-layout multiplier attaining the maximum
  std::string detail;

  bool certified() const {
    return kind == Kind::Polyhedral || kind == Kind::FirstOrder ||
           kind == Kind::SecondOrder;
  }
};

// Core defaults to the subset's non-affine members; then the certificate is
// unconditional.  An explicit core (given in original indices, inside the
// subset) yields a certificate conditional on subregularity of the non-core
// members.
SubregCertificate subregularity_certificate(const MpecPoint& P,
                                            const std::vector<ConstraintRef>& subset,
                                            const RVector& u);
SubregCertificate subregularity_certificate(const MpecPoint& P,
                                            const std::vector<ConstraintRef>& subset,
                                            const RVector& u,
                                            const std::vector<ConstraintRef>& core);

struct WdmscqReport {
  bool confirmed = false;
  std::vector<std::pair<GeneratorRay, SubregCertificate>> per_generator;
};

/// Certificate per generator of conv T_lin, with subset = all constraints.
WdmscqReport wdmscq_report(const MpecPoint& P);

struct DirectionResult {
  RVector u;
  bool in_tlin = false;
  bool in_critical = false;
  std::optional<SetStatus> status;  // of the limiting directional set, when tested
};

struct StationarityReport {
  bool s_stationary = false;
  bool m_stationary = false;
  struct {
    bool verdict = false;
    std::optional<RVector> failing_direction;
    std::vector<DirectionResult> per_direction;
  } extended_m;
  bool linearized_b = false;
  WdmscqReport wdmscq;
  std::vector<std::string> notes;
};

StationarityReport classify(const MpecPoint& P,
                            const std::vector<RVector>& extra_directions = {});

}  // namespace statcert

#endif
