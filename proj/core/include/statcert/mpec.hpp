#ifndef STATCERT_MPEC_HPP
#define STATCERT_MPEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "statcert/polyhedron.hpp"
#include "statcert/rational.hpp"

namespace statcert {

/**
 * One scalar function of the program, frozen at the candidate point.
 * Only the local data enters the theory: the value, the gradient, and
 * (when second order information is wanted) the Hessian.
 */
struct FunctionData {
  std::string name;
  Rational value = 0;
  RVector gradient;
  std::optional<RMatrix> hessian;
  bool affine = false;

  // Hessian with the affine convention applied: affine functions have an
  // identically zero Hessian whether or not one was given.
  std::optional<RMatrix> hessian_or_zero(long n) const;
};

/**
 * A candidate point of the program
 *
 *   min f(x)  s.t.  g(x) <= 0,  h(x) = 0,  G(x) >= 0,  H(x) >= 0,
 *                   G_i(x) H_i(x) = 0 for every pair i,
 *
 * encoded as F(x) in Omega with F = (g, h, -G_1, -H_1, ..., -G_q, -H_q)
 * and Omega the product of the nonpositive orthant, the origin, and q
 * copies of the complementarity cone.
 */
struct MpecPoint {
  long n = 0;
  RVector x;
  FunctionData f;
  std::vector<FunctionData> g, h, G, H;

  long num_g() const { return static_cast<long>(g.size()); }
  long num_h() const { return static_cast<long>(h.size()); }
  long num_pairs() const { return static_cast<long>(G.size()); }
  // Dimension of the image space of F.
  long image_dim() const { return num_g() + num_h() + 2 * num_pairs(); }
};

/// Throws InputError unless the data is well formed and x is feasible.
void validate(const MpecPoint& P);

RVector encode_value(const MpecPoint& P);
RMatrix encode_jacobian(const MpecPoint& P);
PolyUnion encode_omega(const MpecPoint& P);

/**
 * Active index sets at the candidate point.  The pair indices are split by
 * which side vanishes: plus_zero holds i with G_i > 0 = H_i, zero_plus
 * holds i with G_i = 0 < H_i, zero_zero the biactive ones.
 */
struct IndexSets {
  std::vector<long> act_g;
  std::vector<long> plus_zero;
  std::vector<long> zero_plus;
  std::vector<long> zero_zero;
};

IndexSets classify_indices(const MpecPoint& P);

/// Membership in the linearization cone, by direct sign tests.
bool tlin_contains(const MpecPoint& P, const IndexSets& sets, const RVector& u);

/// Membership in the critical cone (linearization cone plus grad f . u <= 0).
bool critical_contains(const MpecPoint& P, const IndexSets& sets, const RVector& u);

/**
 * Refinement of the active sets along a direction u of the linearization
 * cone.  act_g collects i in act_g with grad g_i . u = 0; the biactive
 * pairs split by the signs of (grad G_i . u, grad H_i . u) into
 * plus_zero (positive, zero), zero_plus (zero, positive) and zero_zero
 * (both zero).  Throws InputError when u is not in the linearization cone.
 */
struct DirIndexSets {
  std::vector<long> act_g;
  std::vector<long> plus_zero;
  std::vector<long> zero_plus;
  std::vector<long> zero_zero;
};

DirIndexSets directional_index_sets(const MpecPoint& P, const IndexSets& sets,
                                    const RVector& u);

/**
 * One polyhedral branch of the linearization cone: the pairs listed in
 * grad_G_zero carry grad G_i . u = 0 (with grad H_i . u >= 0), the other
 * biactive pairs carry grad H_i . u = 0 (with grad G_i . u >= 0).
 */
struct LinearizationBranch {
  std::vector<long> grad_G_zero;
  LinearSystem sys;
};

std::vector<LinearizationBranch> tlin_branches(const MpecPoint& P, const IndexSets& sets);
std::vector<LinearizationBranch> critical_branches(const MpecPoint& P, const IndexSets& sets);

/**
 * Directional linear independence constraint qualification: the gradients
 * that may carry a nonzero multiplier in the direction u are linearly
 * independent.  At u = 0 this is the usual strong qualification at the
 * point itself.
 */
bool licq_u(const MpecPoint& P, const IndexSets& sets, const RVector& u);

}  // namespace statcert

#endif
