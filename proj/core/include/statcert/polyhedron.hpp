#ifndef STATCERT_POLYHEDRON_HPP
#define STATCERT_POLYHEDRON_HPP

#include "statcert/lp.hpp"
#include "statcert/rays.hpp"

#include <vector>

namespace statcert {

/** Convex polyhedron in H-representation. */
struct Polyhedron {
    LinearSystem sys;

    Polyhedron() = default;
    explicit Polyhedron(LinearSystem s) : sys(std::move(s)) {}

    Eigen::Index dim() const { return sys.dim; }
    bool contains(const RVector& x) const { return sys.contains(x); }
    bool feasible() const;

    /** Indices of inequality rows tight at x. pre: contains(x). */
    std::vector<std::size_t> active_ineq(const RVector& x) const;

    /** Tangent cone at a member point: equalities plus active inequalities, homogenized. */
    LinearSystem tangent_at(const RVector& x) const;

    /**
     * Generators of the regular normal cone at a member point:
     * active inequality rows as rays, equality rows as lineality directions.
     */
    RayBasis normal_generators_at(const RVector& x) const;
};

/** Finite union of convex polyhedra over a common space. */
struct PolyUnion {
    Eigen::Index dim = 0;
    std::vector<Polyhedron> pieces;

    PolyUnion() = default;
    explicit PolyUnion(Eigen::Index n) : dim(n) {}

    bool contains(const RVector& x) const;
    /** Indices of pieces containing x. */
    std::vector<std::size_t> pieces_at(const RVector& x) const;
};

/** One convex cone of a union, with both exact representations. */
struct ConePiece {
    LinearSystem hrep;
    RayBasis vrep;  // canonical: filled by extreme_rays(hrep)

    bool contains(const RVector& x) const { return hrep.contains(x); }
};

/**
 * Union of closed convex cones. After canonicalize(), pieces carry their
 * canonical V-representation (which is a set invariant, so piece signatures
 * decide equality), duplicates are gone, pieces contained in another piece
 * are dropped, and the order is deterministic.
 */
struct ConeUnion {
    Eigen::Index dim = 0;
    std::vector<ConePiece> pieces;

    ConeUnion() = default;
    explicit ConeUnion(Eigen::Index n) : dim(n) {}

    bool empty_union() const { return pieces.empty(); }
    bool contains(const RVector& x) const;
    void add(LinearSystem hrep);
    void canonicalize();
};

/** Conic hull of `gens` as an H-representation (polar of the polar). */
LinearSystem conic_hull_hrep(const RayBasis& gens, Eigen::Index n);

/** Is every generator of p inside q? With both cones convex this decides p <= q. */
bool cone_subset(const ConePiece& p, const ConePiece& q);
bool cone_equal(const ConePiece& p, const ConePiece& q);

/** Set equality of canonicalized unions. */
bool union_equal(const ConeUnion& a, const ConeUnion& b);

}  // namespace statcert

#endif
