#ifndef STATCERT_QEC_HPP
#define STATCERT_QEC_HPP

#include "statcert/cones.hpp"
#include "statcert/polyhedron.hpp"

namespace statcert {

/**
 * The complementarity cone { (a1, a2) <= 0 : a1 a2 = 0 } as a two-piece
 * polyhedral union in R^2.
 */
PolyUnion qec_union();

bool qec_contains(const RVector& a);

/**
 * Closed forms of the cones of the complementarity cone, written out per
 * stratum (a1 < a2 = 0, a1 = a2 = 0, 0 = a1 > a2) rather than computed by
 * the generic union machinery, so they can serve as its oracle.
 * Preconditions: a in the cone, u in qec_tangent(a) where u appears.
 */
ConeUnion qec_tangent(const RVector& a);
ConePiece qec_regular_normal(const RVector& a);
ConeUnion qec_limiting_normal(const RVector& a);
ConeUnion qec_tangent_of_tangent(const RVector& a, const RVector& u);
ConeUnion qec_directional_normal(const RVector& a, const RVector& u);

}  // namespace statcert

#endif
