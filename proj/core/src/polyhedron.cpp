#include "statcert/polyhedron.hpp"

#include "statcert/errors.hpp"

#include <algorithm>

namespace statcert {

bool Polyhedron::feasible() const {
    return lp_feasible(sys).status == LpStatus::Optimal;
}

std::vector<std::size_t> Polyhedron::active_ineq(const RVector& x) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < sys.ineq.size(); ++k)
        if (sys.ineq[k].a.dot(x) == sys.ineq[k].b) out.push_back(k);
    return out;
}

LinearSystem Polyhedron::tangent_at(const RVector& x) const {
    if (!contains(x)) throw InputError("tangent cone requested at a non-member point");
    LinearSystem cone(sys.dim);
    for (const auto& r : sys.eq) cone.add_eq(r.a, 0);
    for (auto k : active_ineq(x)) cone.add_ineq(sys.ineq[k].a, 0);
    return cone;
}

RayBasis Polyhedron::normal_generators_at(const RVector& x) const {
    if (!contains(x)) throw InputError("normal cone requested at a non-member point");
    RayBasis out;
    for (auto k : active_ineq(x)) {
        if (auto n = normalize_ray(sys.ineq[k].a)) out.rays.push_back(*n);
    }
    for (const auto& r : sys.eq) {
        if (auto n = normalize_ray(r.a)) out.lineality.push_back(*n);
    }
    return out;
}

bool PolyUnion::contains(const RVector& x) const {
    return !pieces_at(x).empty();
}

std::vector<std::size_t> PolyUnion::pieces_at(const RVector& x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (pieces[i].contains(x)) out.push_back(i);
    return out;
}

bool ConeUnion::contains(const RVector& x) const {
    return std::any_of(pieces.begin(), pieces.end(),
                       [&](const ConePiece& p) { return p.contains(x); });
}

void ConeUnion::add(LinearSystem hrep) {
    ConePiece piece;
    piece.hrep = std::move(hrep);
    pieces.push_back(std::move(piece));
}

namespace {

bool vrep_less(const RayBasis& a, const RayBasis& b) {
    if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
    for (std::size_t i = 0; i < a.rays.size(); ++i) {
        if (!vec_equal(a.rays[i], b.rays[i])) return lex_less(a.rays[i], b.rays[i]);
    }
    if (a.lineality.size() != b.lineality.size())
        return a.lineality.size() < b.lineality.size();
    for (std::size_t i = 0; i < a.lineality.size(); ++i) {
        if (!vec_equal(a.lineality[i], b.lineality[i]))
            return lex_less(a.lineality[i], b.lineality[i]);
    }
    return false;
}

bool vrep_equal(const RayBasis& a, const RayBasis& b) {
    return !vrep_less(a, b) && !vrep_less(b, a);
}

}  // namespace

void ConeUnion::canonicalize() {
    for (auto& p : pieces) p.vrep = extreme_rays(p.hrep);
    std::sort(pieces.begin(), pieces.end(),
              [](const ConePiece& a, const ConePiece& b) { return vrep_less(a.vrep, b.vrep); });
    pieces.erase(std::unique(pieces.begin(), pieces.end(),
                             [](const ConePiece& a, const ConePiece& b) {
                                 return vrep_equal(a.vrep, b.vrep);
                             }),
                 pieces.end());
    // Drop pieces covered by another piece; on mutual coverage keep the earlier.
    std::vector<bool> dropped(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = 0; j < pieces.size() && !dropped[i]; ++j) {
            if (i == j || dropped[j]) continue;
            if (cone_subset(pieces[i], pieces[j]) && !cone_subset(pieces[j], pieces[i]))
                dropped[i] = true;
        }
    }
    std::vector<ConePiece> kept;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (!dropped[i]) kept.push_back(std::move(pieces[i]));
    pieces = std::move(kept);
}

LinearSystem conic_hull_hrep(const RayBasis& gens, Eigen::Index n) {
    LinearSystem polar(n);
    for (const auto& g : gens.rays) polar.add_ineq(g, 0);
    for (const auto& l : gens.lineality) polar.add_eq(l, 0);
    const RayBasis dual = extreme_rays(polar);
    LinearSystem hrep(n);
    for (const auto& r : dual.rays) hrep.add_ineq(r, 0);
    for (const auto& l : dual.lineality) hrep.add_eq(l, 0);
    return hrep;
}

bool cone_subset(const ConePiece& p, const ConePiece& q) {
    for (const auto& r : p.vrep.rays)
        if (!q.contains(r)) return false;
    for (const auto& l : p.vrep.lineality) {
        if (!q.contains(l)) return false;
        if (!q.contains(RVector(-l))) return false;
    }
    return true;
}

bool cone_equal(const ConePiece& p, const ConePiece& q) {
    return vrep_equal(p.vrep, q.vrep);
}

bool union_equal(const ConeUnion& a, const ConeUnion& b) {
    if (a.pieces.size() != b.pieces.size()) return false;
    for (std::size_t i = 0; i < a.pieces.size(); ++i)
        if (!cone_equal(a.pieces[i], b.pieces[i])) return false;
    return true;
}

}  // namespace statcert
