#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "statcert/errors.hpp"
#include "statcert/linalg.hpp"
#include "statcert/lp.hpp"
#include "statcert/rays.hpp"

using namespace statcert;
using namespace statcert::testing;

TEST_CASE("parse_rational accepts canonical forms only") {
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("3/4") == Rational(3) / 4);
  CHECK(parse_rational("-1/2") == Rational(-1) / 2);
  CHECK_THROWS_AS(parse_rational("2/4"), InputError);
  CHECK_THROWS_AS(parse_rational("0/3"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("+1"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(" 1"), InputError);
}

TEST_CASE("format_rational round trips") {
  for (const char* s : {"0", "1", "-1", "22/7", "-355/113"}) {
    CHECK(format_rational(parse_rational(s)) == s);
  }
}

TEST_CASE("exact_sqrt") {
  CHECK(*exact_sqrt(Rational(4)) == Rational(2));
  CHECK(*exact_sqrt(Rational(9) / 4) == Rational(3) / 2);
  CHECK(*exact_sqrt(Rational(0)) == Rational(0));
  CHECK(!exact_sqrt(Rational(2)));
  CHECK(!exact_sqrt(Rational(1) / 3));
}

TEST_CASE("ray normalization and direction comparison") {
  const RVector v = vec({2, 0, -2});
  const RVector w = vec({3, 0, -3});
  CHECK(vec_equal(*normalize_ray(v), vecq({"1/2", "0", "-1/2"})));
  CHECK(same_direction(v, w));
  CHECK(!same_direction(v, vec({-2, 0, 2})));
  CHECK(!normalize_ray(vec({0, 0})));
}

TEST_CASE("rank and nullspace on hand examples") {
  {
    const auto r = rank_and_nullspace({vec({1, 0}), vec({0, 1})});
    CHECK(r.rank == 2);
    CHECK(r.independent);
    CHECK(r.nullspace.empty());
  }
  {
    const auto r = rank_and_nullspace(
        {vec({-4, 0, 1}), vec({0, -4, 1}), vec({1, 0, 0}), vec({0, 1, 0})});
    CHECK(r.rank == 3);
    CHECK(!r.independent);
  }
  {
    const auto r = rank_and_nullspace({vec({1, 1}), vec({2, 2})});
    CHECK(r.rank == 1);
    CHECK(!r.independent);
    REQUIRE(r.nullspace.size() == 1);
    // canonical kernel basis: free entry 1
    CHECK(vec_equal(r.nullspace[0], vecq({"-1", "1"})));
  }
  {
    const auto r = rank_and_nullspace({}, 3);
    CHECK(r.rank == 0);
    CHECK(r.nullspace.size() == 3);
  }
}

TEST_CASE("nullspace vectors annihilate the rows") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    const long n = 2 + static_cast<long>(rng() % 4);
    const long m = 1 + static_cast<long>(rng() % 4);
    std::vector<RVector> rows;
    for (long i = 0; i < m; ++i) {
      RVector r(n);
      for (long j = 0; j < n; ++j) r[j] = Rational(static_cast<long>(rng() % 7) - 3);
      rows.push_back(r);
    }
    const auto res = rank_and_nullspace(rows);
    CHECK(res.rank + static_cast<long>(res.nullspace.size()) == n);
    for (const RVector& v : res.nullspace)
      for (const RVector& r : rows) CHECK(sign(r.dot(v)) == 0);
    CHECK(rows_independent(rows) == res.independent);
  }
}

TEST_CASE("solve_particular") {
  RMatrix a(2, 3);
  a << Rational(1), Rational(0), Rational(1), Rational(0), Rational(1), Rational(-1);
  const RVector b = vec({2, 1});
  const auto x = solve_particular(a, b);
  REQUIRE(x);
  CHECK(vec_equal(RVector(a * *x), b));

  RMatrix bad(2, 1);
  bad << Rational(1), Rational(2);
  CHECK(!solve_particular(bad, vec({1, 1})));
}

TEST_CASE("lp_solve hand examples") {
  {
    LinearSystem sys(1);
    sys.add_ineq(vec({-1}), 0);  // x >= 0
    const LpOutcome out = lp_solve(vec({1}), Sense::Minimize, sys);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(*out.value == Rational(0));
    CHECK(vec_equal(*out.point, vec({0})));
  }
  {
    LinearSystem sys(1);
    sys.add_ineq(vec({1}), -1);  // x <= -1
    sys.add_ineq(vec({-1}), 0);  // x >= 0
    const LpOutcome out = lp_feasible(sys);
    REQUIRE(out.status == LpStatus::Infeasible);
    // Farkas witness: nonnegative combination with negative rhs total
    REQUIRE(out.dual_ineq);
    Rational combo_rhs = 0;
    RVector combo = zero_vector(1);
    for (std::size_t k = 0; k < sys.ineq.size(); ++k) {
      CHECK(sign((*out.dual_ineq)[static_cast<long>(k)]) >= 0);
      combo += (*out.dual_ineq)[static_cast<long>(k)] * sys.ineq[k].a;
      combo_rhs += (*out.dual_ineq)[static_cast<long>(k)] * sys.ineq[k].b;
    }
    CHECK(is_zero(combo));
    CHECK(sign(combo_rhs) < 0);
  }
  {
    LinearSystem sys(3);
    sys.add_eq(vec({1, 0, 0}), 0);    // u1 = 0
    sys.add_ineq(vec({0, 0, -1}), 0);  // u3 >= 0
    sys.add_ineq(vec({0, -1, 1}), 0);  // u3 <= u2
    sys.add_ineq(vec({0, 1, 0}), 1);   // u2 <= 1
    const LpOutcome out = lp_solve(vec({1, 1, -2}), Sense::Minimize, sys);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(*out.value == Rational(-1));
    CHECK(vec_equal(*out.point, vec({0, 1, 1})));
  }
  {
    LinearSystem sys(2);
    sys.add_ineq(vec({-1, 0}), 0);
    const LpOutcome out = lp_solve(vec({0, 1}), Sense::Minimize, sys);
    REQUIRE(out.status == LpStatus::Unbounded);
    REQUIRE(out.ray);
    CHECK(sign(vec({0, 1}).dot(*out.ray)) < 0);
  }
}

TEST_CASE("extreme_rays hand examples") {
  {
    LinearSystem orthant(2);
    orthant.add_ineq(vec({-1, 0}), 0);
    orthant.add_ineq(vec({0, -1}), 0);
    const RayBasis basis = extreme_rays(orthant);
    REQUIRE(basis.rays.size() == 2);
    CHECK(basis.lineality.empty());
    CHECK(vec_equal(basis.rays[0], vec({0, 1})));
    CHECK(vec_equal(basis.rays[1], vec({1, 0})));
  }
  {
    LinearSystem cone(3);
    cone.add_eq(vec({1, 0, 0}), 0);
    cone.add_ineq(vec({0, 0, -1}), 0);
    cone.add_ineq(vec({0, -1, 1}), 0);
    const RayBasis basis = extreme_rays(cone);
    REQUIRE(basis.rays.size() == 2);
    CHECK(basis.lineality.empty());
    CHECK(vec_equal(basis.rays[0], vecq({"0", "1/2", "1/2"})));
    CHECK(vec_equal(basis.rays[1], vec({0, 1, 0})));
  }
  {
    LinearSystem half(2);
    half.add_ineq(vec({-1, 0}), 0);
    const RayBasis basis = extreme_rays(half);
    REQUIRE(basis.rays.size() == 1);
    CHECK(vec_equal(basis.rays[0], vec({1, 0})));
    REQUIRE(basis.lineality.size() == 1);
    const bool vertical = same_direction(basis.lineality[0], vec({0, 1})) ||
                          same_direction(basis.lineality[0], vec({0, -1}));
    CHECK(vertical);
  }
  {
    LinearSystem origin(2);
    origin.add_eq(vec({1, 0}), 0);
    origin.add_eq(vec({0, 1}), 0);
    const RayBasis basis = extreme_rays(origin);
    CHECK(basis.rays.empty());
    CHECK(basis.lineality.empty());
  }
}

TEST_CASE("extreme_rays outputs generate exactly the cone") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 25; ++it) {
    const long n = 2 + static_cast<long>(rng() % 3);
    LinearSystem cone(n);
    const long m = 1 + static_cast<long>(rng() % 4);
    for (long i = 0; i < m; ++i) {
      RVector a(n);
      for (long j = 0; j < n; ++j) a[j] = Rational(static_cast<long>(rng() % 5) - 2);
      if (rng() % 4 == 0)
        cone.add_eq(a, 0);
      else
        cone.add_ineq(a, 0);
    }
    const RayBasis basis = extreme_rays(cone);
    for (const RVector& r : basis.rays) CHECK(cone.contains(r));
    for (const RVector& v : basis.lineality) {
      CHECK(cone.contains(v));
      CHECK(cone.contains(RVector(-v)));
    }
    // random conic combinations land back in the H-representation, and
    // random cone points (built that way) pass LP membership in the V-rep
    for (int s = 0; s < 4; ++s) {
      RVector x = zero_vector(n);
      for (const RVector& r : basis.rays) x += Rational(static_cast<long>(rng() % 3)) * r;
      for (const RVector& v : basis.lineality)
        x += Rational(static_cast<long>(rng() % 5) - 2) * v;
      CHECK(cone.contains(x));
      CHECK(in_conic_hull(basis, x));
    }
  }
}

TEST_CASE("optimal outcomes satisfy the documented certificate identities") {
  LinearSystem sys(3);
  sys.add_eq(vec({1, 1, 1}), 3);
  sys.add_ineq(vec({-1, 0, 0}), 0);
  sys.add_ineq(vec({0, -1, 0}), 0);
  sys.add_ineq(vec({0, 0, -1}), 0);
  for (Sense sense : {Sense::Minimize, Sense::Maximize}) {
    const RVector c = vec({1, 2, 4});
    const LpOutcome out = lp_solve(c, sense, sys);
    REQUIRE(out.status == LpStatus::Optimal);
    const Rational s = sense == Sense::Minimize ? 1 : -1;
    RVector stat = s * c;
    Rational rhs_total = 0;
    for (std::size_t i = 0; i < sys.eq.size(); ++i) {
      stat += (*out.dual_eq)[static_cast<long>(i)] * sys.eq[i].a;
      rhs_total += (*out.dual_eq)[static_cast<long>(i)] * sys.eq[i].b;
    }
    for (std::size_t k = 0; k < sys.ineq.size(); ++k) {
      const Rational y = (*out.dual_ineq)[static_cast<long>(k)];
      CHECK(sign(y) >= 0);
      stat += y * sys.ineq[k].a;
      rhs_total += y * sys.ineq[k].b;
      CHECK(sign(y * (sys.ineq[k].b - sys.ineq[k].a.dot(*out.point))) == 0);
    }
    CHECK(is_zero(stat));
    CHECK(s * *out.value == -rhs_total);
  }
}
