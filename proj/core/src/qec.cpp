#include "statcert/qec.hpp"

#include "statcert/errors.hpp"
#include "statcert/rays.hpp"

namespace statcert {

namespace {

enum class Stratum { Neg0, Zero, ZeroNeg };

Stratum stratum_of(const RVector& a) {
  if (!qec_contains(a)) throw InputError("point is not in the complementarity cone");
  if (sign(a(0)) < 0) return Stratum::Neg0;
  if (sign(a(1)) < 0) return Stratum::ZeroNeg;
  return Stratum::Zero;
}

LinearSystem axis_eq(long which) {
  // {v : v_which = 0}
  LinearSystem sys(2);
  RVector e = zero_vector(2);
  e(which) = 1;
  sys.add_eq(e, 0);
  return sys;
}

LinearSystem nonneg_quadrant() {
  LinearSystem sys(2);
  RVector e1 = zero_vector(2), e2 = zero_vector(2);
  e1(0) = -1;
  e2(1) = -1;
  sys.add_ineq(e1, 0);
  sys.add_ineq(e2, 0);
  return sys;
}

LinearSystem branch(long zero_coord) {
  // {v : v_zero = 0, v_other <= 0}
  LinearSystem sys = axis_eq(zero_coord);
  RVector e = zero_vector(2);
  e(1 - zero_coord) = 1;
  sys.add_ineq(e, 0);
  return sys;
}

ConeUnion one_piece(const LinearSystem& sys) {
  ConeUnion cu(2);
  cu.add(sys);
  cu.canonicalize();
  return cu;
}

ConeUnion both_branches() {
  ConeUnion cu(2);
  cu.add(branch(1));
  cu.add(branch(0));
  cu.canonicalize();
  return cu;
}

ConeUnion zero_limiting() {
  ConeUnion cu(2);
  cu.add(nonneg_quadrant());
  cu.add(axis_eq(0));
  cu.add(axis_eq(1));
  cu.canonicalize();
  return cu;
}

}  // namespace

PolyUnion qec_union() {
  PolyUnion pu(2);
  pu.pieces.push_back(Polyhedron(branch(1)));
  pu.pieces.push_back(Polyhedron(branch(0)));
  return pu;
}

bool qec_contains(const RVector& a) {
  if (a.size() != 2) throw InputError("complementarity cone points live in R^2");
  return sign(a(0)) <= 0 && sign(a(1)) <= 0 && sign(a(0) * a(1)) == 0;
}

ConeUnion qec_tangent(const RVector& a) {
  switch (stratum_of(a)) {
    case Stratum::Neg0: return one_piece(axis_eq(1));
    case Stratum::ZeroNeg: return one_piece(axis_eq(0));
    case Stratum::Zero: return both_branches();
  }
  throw InputError("unreachable");
}

ConePiece qec_regular_normal(const RVector& a) {
  auto piece = [](const LinearSystem& sys) {
    // keep the ConePiece invariant: vrep is the canonical signature
    ConePiece p;
    p.hrep = sys;
    p.vrep = extreme_rays(p.hrep);
    return p;
  };
  switch (stratum_of(a)) {
    case Stratum::Neg0: return piece(axis_eq(0));
    case Stratum::ZeroNeg: return piece(axis_eq(1));
    case Stratum::Zero: return piece(nonneg_quadrant());
  }
  throw InputError("unreachable");
}

ConeUnion qec_limiting_normal(const RVector& a) {
  switch (stratum_of(a)) {
    case Stratum::Neg0: return one_piece(axis_eq(0));
    case Stratum::ZeroNeg: return one_piece(axis_eq(1));
    case Stratum::Zero: return zero_limiting();
  }
  throw InputError("unreachable");
}

ConeUnion qec_tangent_of_tangent(const RVector& a, const RVector& u) {
  Stratum s = stratum_of(a);
  if (!qec_tangent(a).contains(u))
    throw InputError("direction is not tangent to the complementarity cone");
  if (s == Stratum::Neg0) return one_piece(axis_eq(1));
  if (s == Stratum::ZeroNeg) return one_piece(axis_eq(0));
  // a = 0, so the tangent cone is the complementarity cone itself and the
  // result only depends on the stratum of u within it.
  if (is_zero(u)) return both_branches();
  if (sign(u(0)) < 0) return one_piece(axis_eq(1));
  return one_piece(axis_eq(0));
}

ConeUnion qec_directional_normal(const RVector& a, const RVector& u) {
  Stratum s = stratum_of(a);
  if (!qec_tangent(a).contains(u))
    throw InputError("direction is not tangent to the complementarity cone");
  if (s == Stratum::Neg0) return one_piece(axis_eq(0));
  if (s == Stratum::ZeroNeg) return one_piece(axis_eq(1));
  if (is_zero(u)) return zero_limiting();
  if (sign(u(0)) < 0) return one_piece(axis_eq(0));
  return one_piece(axis_eq(1));
}

}  // namespace statcert
