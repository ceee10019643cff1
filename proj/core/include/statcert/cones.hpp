#ifndef STATCERT_CONES_HPP
#define STATCERT_CONES_HPP

#include "statcert/polyhedron.hpp"

namespace statcert {

/**
 * Tangent cone of a polyhedral union at x: union over the pieces containing x
 * of their active-constraint cones. Empty union when x is outside.
 */
ConeUnion tangent_cone(const PolyUnion& omega, const RVector& x);

/**
 * Regular (Fréchet) normal cone at a member point: intersection over the
 * pieces containing x of their active-gradient cones, each converted from
 * generators to an H-representation exactly. Throws InputError off the union.
 */
ConePiece frechet_normal_cone(const PolyUnion& omega, const RVector& x);

/**
 * Directional limiting normal cone at x in direction u.
 *
 * Computed as the union of regular normal cones of the second-order tangent
 * sets: all face patterns (piece subset + face active-set choice per piece)
 * are enumerated, each pattern's realizability is decided by one exact LP
 * with a maximized slack standing in for the strict inequalities, and every
 * realizable pattern contributes the intersection of its face-generator
 * cones. Empty union when x is outside, or u leaves the tangent cone.
 */
ConeUnion directional_limiting_normal_cone(const PolyUnion& omega, const RVector& x,
                                           const RVector& u);

/**
 * Limiting normal cone by brute-force face enumeration, deciding pattern
 * realizability per strict row instead of by a shared slack. Independent
 * cross-check for directional_limiting_normal_cone(omega, x, 0).
 */
ConeUnion limiting_normal_cone_bruteforce(const PolyUnion& omega, const RVector& x);

}  // namespace statcert

#endif
