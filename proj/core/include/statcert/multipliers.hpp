#ifndef STATCERT_MULTIPLIERS_HPP
#define STATCERT_MULTIPLIERS_HPP

#include <optional>
#include <vector>

#include "statcert/lp.hpp"
#include "statcert/mpec.hpp"

namespace statcert {

enum class MultVariant { Limiting, Regular };

/// Sign pattern of one biactive pair inside a multiplier branch.
enum class PairSign { BothNonneg, GZero, HZero };

/**
 * A constraint of the program, for naming core sets and restrictions.
 * A Pair ref means both functions of the complementarity pair.
 */
struct ConstraintRef {
  enum class Kind { Ineq, Eq, Pair };
  Kind kind = Kind::Ineq;
  long index = 0;

  friend bool operator==(const ConstraintRef& a, const ConstraintRef& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator<(const ConstraintRef& a, const ConstraintRef& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.index < b.index;
  }
};

/// All constraints of the program, as refs.
std::vector<ConstraintRef> all_constraints(const MpecPoint& P);

/// The non-affine constraints; a pair is included when either member is non-affine.
std::vector<ConstraintRef> default_core_set(const MpecPoint& P);

/**
 * Multiplier vectors are stacked as (lam_g, lam_h, lam_G, lam_H) in R^{l+p+2q}.
 */
long mult_dim(const MpecPoint& P);
long idx_g(const MpecPoint& P, long i);
long idx_h(const MpecPoint& P, long i);
long idx_G(const MpecPoint& P, long i);
long idx_H(const MpecPoint& P, long i);

struct MultiplierBranch {
  // Sign choice per biactive-along-u pair, ascending pair index.
  std::vector<std::pair<long, PairSign>> pattern;
  LinearSystem sys;
};

/**
 * A directional multiplier set: all lambda with Lagrangian stationarity
 * at the given lambda0, the sign and vanishing conditions induced by the
 * direction u, and (limiting variant) one branch per sign pattern of the
 * biactive-along-u pairs.  For lambda0 = 0 the nonzero condition "core
 * part of lambda != 0" is realized in query_branches by splitting into
 * sign orthants of the free core coordinates and normalizing their
 * signed sum to 1; base branches stay unnormalized for membership tests.
 */
struct MultiplierSet {
  long l = 0, p = 0, q = 0, n = 0;
  int lambda0 = 1;
  MultVariant variant = MultVariant::Limiting;
  RVector direction;
  std::vector<ConstraintRef> core;
  std::vector<long> core_coords;
  std::vector<MultiplierBranch> branches;

  struct QueryBranch {
    std::size_t base = 0;  // index into branches
    LinearSystem sys;
  };
  std::vector<QueryBranch> query_branches;

  long dim() const { return l + p + 2 * q; }
};

MultiplierSet build_multiplier_set(const MpecPoint& P, int lambda0, const RVector& u,
                                   MultVariant variant,
                                   const std::vector<ConstraintRef>& core_set);
MultiplierSet build_multiplier_set(const MpecPoint& P, int lambda0, const RVector& u,
                                   MultVariant variant);

enum class SetStatus { Empty, Nonempty, Singleton };

struct BranchExtremum {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Rational> value;
};

struct SetQueryResult {
  SetStatus status = SetStatus::Empty;
  std::optional<RVector> witness;
  // Filled when an objective was supplied:
  std::vector<BranchExtremum> per_branch;
  bool any_unbounded = false;
  std::optional<Rational> best;       // best finite branch optimum
  std::optional<RVector> best_witness;
};

/// Emptiness test only (no coordinate sweep).
bool set_empty(const MultiplierSet& set);

/// Status with the Singleton refinement via per-coordinate extrema.
SetQueryResult query(const MultiplierSet& set);

/// Additionally optimizes the objective over every query branch.
SetQueryResult query(const MultiplierSet& set, const RVector& objective, Sense sense);

/// Some member with objective . lambda >= bound, if one exists.
std::optional<RVector> point_with_value_at_least(const MultiplierSet& set,
                                                 const RVector& objective,
                                                 const Rational& bound);

/// Exact membership; for lambda0 = 0 the core part must be nonzero.
bool membership(const MultiplierSet& set, const RVector& lambda);

/// True when the coordinate vanishes on the whole set (checked per branch).
bool coordinate_always_zero(const MultiplierSet& set, long coord);

/**
 * No nonzero abnormal multiplier: the lambda0 = 0 limiting set at u = 0
 * with every constraint counted in the nonzero condition is empty.
 */
bool gmfcq_holds(const MpecPoint& P);

}  // namespace statcert

#endif
