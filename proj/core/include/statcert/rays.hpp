#ifndef STATCERT_RAYS_HPP
#define STATCERT_RAYS_HPP

#include "statcert/lp.hpp"
#include "statcert/rational.hpp"

#include <vector>

namespace statcert {

/**
 * V-representation of a polyhedral cone:
 *   cone = { sum_i a_i rays_i + sum_j b_j lineality_j : a >= 0, b free }.
 * Rays are 1-norm normalized and lexicographically sorted; the lineality
 * vectors are a canonical kernel basis.
 */
struct RayBasis {
    std::vector<RVector> rays;
    std::vector<RVector> lineality;
};

/**
 * Extreme rays and lineality space of the homogeneous cone described by
 * `cone` (all right-hand sides must be zero). Double description over the
 * pointed quotient: the lineality space is split off first, the remaining
 * pointed cone is built row by row with the combinatorial adjacency test.
 */
RayBasis extreme_rays(const LinearSystem& cone);

/** Exact membership of x in the conic hull described by `rep`. */
bool in_conic_hull(const RayBasis& rep, const RVector& x);

}  // namespace statcert

#endif
