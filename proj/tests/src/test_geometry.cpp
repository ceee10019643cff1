#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "statcert/cones.hpp"
#include "statcert/qec.hpp"

using namespace statcert;
using namespace statcert::testing;

namespace {

// Random finite union of polyhedra all containing the origin.
PolyUnion random_union(std::mt19937_64& rng, long n, int pieces) {
  PolyUnion u;
  u.dim = n;
  for (int p = 0; p < pieces; ++p) {
    Polyhedron poly;
    poly.sys = LinearSystem(n);
    const int rows = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < rows; ++i) {
      RVector a(n);
      bool nonzero = false;
      for (long j = 0; j < n; ++j) {
        a[j] = Rational(static_cast<long>(rng() % 5) - 2);
        nonzero = nonzero || sign(a[j]) != 0;
      }
      if (!nonzero) a[0] = 1;
      if (rng() % 4 == 0)
        poly.sys.add_eq(a, 0);
      else
        poly.sys.add_ineq(a, Rational(static_cast<long>(rng() % 2)));
    }
    u.pieces.push_back(poly);
  }
  return u;
}

std::vector<RVector> generator_directions(const ConeUnion& cu) {
  std::vector<RVector> out;
  for (const ConePiece& p : cu.pieces) {
    for (const RVector& r : p.vrep.rays) out.push_back(r);
    for (const RVector& l : p.vrep.lineality) {
      out.push_back(l);
      out.push_back(RVector(-l));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("complementarity corner: cones at the kink") {
  const RVector origin = vec({0, 0});
  const PolyUnion q = qec_union();

  const ConeUnion tangent = tangent_cone(q, origin);
  CHECK(union_equal(tangent, qec_tangent(origin)));
  CHECK(tangent.contains(vec({-3, 0})));
  CHECK(tangent.contains(vec({0, -1})));
  CHECK(!tangent.contains(vec({-1, -1})));
  CHECK(!tangent.contains(vec({1, 0})));

  const ConePiece regular = frechet_normal_cone(q, origin);
  CHECK(cone_equal(regular, qec_regular_normal(origin)));
  CHECK(regular.contains(vec({2, 5})));
  CHECK(!regular.contains(vec({-1, 0})));

  const ConeUnion limiting = limiting_normal_cone_bruteforce(q, origin);
  CHECK(union_equal(limiting, qec_limiting_normal(origin)));
  CHECK(limiting.contains(vec({1, 1})));
  CHECK(limiting.contains(vec({-1, 0})));
  CHECK(limiting.contains(vec({0, -3})));
  CHECK(!limiting.contains(vec({-1, -1})));
  CHECK(!limiting.contains(vec({-2, 1})));
}

TEST_CASE("complementarity corner: smooth branch point") {
  const RVector a = vec({-1, 0});
  const PolyUnion q = qec_union();

  const ConeUnion tangent = tangent_cone(q, a);
  CHECK(tangent.contains(vec({5, 0})));
  CHECK(tangent.contains(vec({-5, 0})));
  CHECK(!tangent.contains(vec({0, 1})));

  const ConeUnion limiting = limiting_normal_cone_bruteforce(q, a);
  CHECK(union_equal(limiting, qec_limiting_normal(a)));
  CHECK(limiting.contains(vec({0, 7})));
  CHECK(limiting.contains(vec({0, -7})));
  CHECK(!limiting.contains(vec({1, 0})));
}

TEST_CASE("closed-form directional cones match the generic enumeration") {
  const PolyUnion q = qec_union();
  const std::vector<RVector> bases = {vec({0, 0}), vec({-1, 0}), vec({0, -1})};
  for (const RVector& a : bases) {
    const ConeUnion tangent = qec_tangent(a);
    for (long u1 = -2; u1 <= 2; ++u1)
      for (long u2 = -2; u2 <= 2; ++u2) {
        const RVector u = vec({u1, u2});
        if (!tangent.contains(u)) continue;
        const ConeUnion closed = qec_directional_normal(a, u);
        const ConeUnion generic = directional_limiting_normal_cone(q, a, u);
        CHECK(union_equal(closed, generic));
      }
  }
}

TEST_CASE("directional generators are orthogonal to the direction and limiting") {
  std::mt19937_64 rng(23);
  int evaluated = 0;
  for (int rounds = 0; evaluated < 60 && rounds < 4000; ++rounds) {
    const long n = 2 + static_cast<long>(rng() % 2);
    const PolyUnion omega = random_union(rng, n, 1 + static_cast<int>(rng() % 2));
    const RVector x = zero_vector(n);
    const ConeUnion tangent = tangent_cone(omega, x);
    const ConeUnion limiting = limiting_normal_cone_bruteforce(omega, x);
    for (const RVector& u : generator_directions(tangent)) {
      const ConeUnion dir = directional_limiting_normal_cone(omega, x, u);
      if (dir.empty_union()) continue;
      for (const RVector& xi : generator_directions(dir)) {
        CHECK(sign(xi.dot(u)) == 0);
        CHECK(limiting.contains(xi));
      }
      ++evaluated;
    }
  }
  CHECK(evaluated >= 60);
}

TEST_CASE("directional cone is positively homogeneous and reduces at zero") {
  std::mt19937_64 rng(29);
  const std::vector<Rational> scales = {Rational(2), Rational(1) / 3, Rational(7)};
  for (int it = 0; it < 40; ++it) {
    const long n = 2 + static_cast<long>(rng() % 2);
    const PolyUnion omega = random_union(rng, n, 1 + static_cast<int>(rng() % 2));
    const RVector x = zero_vector(n);

    const ConeUnion at_zero = directional_limiting_normal_cone(omega, x, zero_vector(n));
    CHECK(union_equal(at_zero, limiting_normal_cone_bruteforce(omega, x)));

    RVector u(n);
    for (long j = 0; j < n; ++j) u[j] = Rational(static_cast<long>(rng() % 5) - 2);
    const ConeUnion base = directional_limiting_normal_cone(omega, x, u);
    for (const Rational& t : scales) {
      const ConeUnion scaled = directional_limiting_normal_cone(omega, x, RVector(t * u));
      CHECK(union_equal(base, scaled));
    }
  }
}

TEST_CASE("convex case: directional union is the face of the regular cone") {
  std::mt19937_64 rng(31);
  int evaluated = 0;
  for (int rounds = 0; evaluated < 50 && rounds < 4000; ++rounds) {
    const long n = 2 + static_cast<long>(rng() % 2);
    const PolyUnion omega = random_union(rng, n, 1);
    const RVector x = zero_vector(n);
    const ConePiece regular = frechet_normal_cone(omega, x);
    for (const RVector& u : generator_directions(tangent_cone(omega, x))) {
      const ConeUnion dir = directional_limiting_normal_cone(omega, x, u);
      LinearSystem face = regular.hrep;
      face.add_eq(u, 0);
      ConeUnion expected(n);
      expected.add(face);
      expected.canonicalize();
      CHECK(union_equal(dir, expected));
      ++evaluated;
    }
  }
  CHECK(evaluated >= 50);
}

TEST_CASE("union membership helpers") {
  const PolyUnion q = qec_union();
  CHECK(q.contains(vec({0, 0})));
  CHECK(q.contains(vec({-4, 0})));
  CHECK(q.contains(vec({0, -4})));
  CHECK(!q.contains(vec({-1, -1})));
  CHECK(!q.contains(vec({1, 0})));
  CHECK(qec_contains(vec({0, -2})));
  CHECK(!qec_contains(vec({2, 0})));
  CHECK(q.pieces_at(vec({0, 0})).size() == 2);
  CHECK(q.pieces_at(vec({-1, 0})).size() == 1);
}
