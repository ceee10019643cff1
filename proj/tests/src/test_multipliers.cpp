#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "random_instances.hpp"
#include "statcert/qec.hpp"

using namespace statcert;
using namespace statcert::testing;

TEST_CASE("limiting multiplier set of the mixed example is a singleton") {
  const MpecPoint P = corpus_point("example3");
  const MultiplierSet lam1 = build_multiplier_set(P, 1, zero_vector(3), MultVariant::Limiting);
  const SetQueryResult res = query(lam1);
  REQUIRE(res.status == SetStatus::Singleton);
  CHECK(vec_equal(*res.witness, vec({1, 3, 0, -2})));

  CHECK(membership(lam1, vec({1, 3, 0, -2})));
  CHECK(!membership(lam1, vec({1, 3, 0, 2})));
  CHECK(!membership(lam1, vec({0, 0, 0, 0})));

  // the regular variant forbids the negative H-multiplier on the biactive pair
  const MultiplierSet reg = build_multiplier_set(P, 1, zero_vector(3), MultVariant::Regular);
  CHECK(!membership(reg, vec({1, 3, 0, -2})));
  CHECK(set_empty(reg));

  // one biactive pair: three limiting branches, one regular branch
  CHECK(lam1.branches.size() == 3);
  CHECK(reg.branches.size() == 1);
}

TEST_CASE("directional set along the critical ray is empty") {
  const MpecPoint P = corpus_point("example3");
  const MultiplierSet dir =
      build_multiplier_set(P, 1, vec({0, 1, 1}), MultVariant::Limiting);
  CHECK(set_empty(dir));
  CHECK(query(dir).status == SetStatus::Empty);
}

TEST_CASE("abnormal multipliers and the core-set nonzero condition") {
  const MpecPoint P = corpus_point("example4_a1");
  // default core is the lone non-affine inequality
  const MultiplierSet lam0 = build_multiplier_set(P, 0, zero_vector(2), MultVariant::Limiting);
  const SetQueryResult res = query(lam0);
  REQUIRE(res.status == SetStatus::Singleton);
  CHECK(vec_equal(*res.witness, vec({1, 0, -1})));
  CHECK(membership(lam0, vec({2, 0, -2})));
  CHECK(!membership(lam0, zero_vector(3)));

  const auto far = point_with_value_at_least(lam0, vec({1, 0, 0}), 10);
  REQUIRE(far);
  CHECK((*far)[0] >= Rational(10));
  CHECK(membership(lam0, *far));
}

TEST_CASE("explicit core sets change only the nonzero condition") {
  const MpecPoint P = corpus_point("example2");
  const RVector u = vec({1, 0});
  for (int lambda0 : {1, 0}) {
    for (MultVariant variant : {MultVariant::Limiting, MultVariant::Regular}) {
      const MultiplierSet with_default = build_multiplier_set(P, lambda0, u, variant);
      const std::vector<ConstraintRef> small = {{ConstraintRef::Kind::Ineq, 0},
                                                {ConstraintRef::Kind::Ineq, 1}};
      const MultiplierSet with_small = build_multiplier_set(P, lambda0, u, variant, small);
      if (lambda0 == 1) {
        CHECK(set_empty(with_default));
        CHECK(set_empty(with_small));
      } else {
        const SetQueryResult res = query(with_default);
        REQUIRE(res.status == SetStatus::Singleton);
        CHECK(vec_equal(*res.witness, vec({0, 0, 1})));
        // g3 is outside the small core, so its multiplier no longer counts
        CHECK(set_empty(with_small));
      }
    }
  }
}

TEST_CASE("core defaults to the non-affine constraints") {
  const MpecPoint P = corpus_point("example2");
  const auto core = default_core_set(P);
  REQUIRE(core.size() == 2);
  CHECK(core[0] == ConstraintRef{ConstraintRef::Kind::Ineq, 0});
  CHECK(core[1] == ConstraintRef{ConstraintRef::Kind::Ineq, 2});
  CHECK(all_constraints(P).size() == 3);
  CHECK(default_core_set(corpus_point("example3")).empty());
}

TEST_CASE("pure complementarity point keeps only the sign-restricted branch") {
  const MpecPoint P = corpus_point("remark2");
  const MultiplierSet lam1 = build_multiplier_set(P, 1, zero_vector(2), MultVariant::Limiting);
  const SetQueryResult res = query(lam1);
  REQUIRE(res.status == SetStatus::Singleton);
  CHECK(vec_equal(*res.witness, vec({-1, 0})));
  CHECK(set_empty(build_multiplier_set(P, 1, zero_vector(2), MultVariant::Regular)));
}

TEST_CASE("coordinate sweeps") {
  const MpecPoint P = corpus_point("example3");
  const MultiplierSet lam1 = build_multiplier_set(P, 1, zero_vector(3), MultVariant::Limiting);
  CHECK(coordinate_always_zero(lam1, idx_G(P, 0)));
  CHECK(!coordinate_always_zero(lam1, idx_g(P, 0)));
  CHECK(mult_dim(P) == 4);
  CHECK(idx_g(P, 1) == 1);
  CHECK(idx_H(P, 0) == 3);
}

TEST_CASE("three-branch decomposition matches the sign condition") {
  // a pair with vanishing gradients leaves the pair multipliers unconstrained
  // by stationarity, so membership exercises the branch decomposition alone
  MpecPoint P;
  P.n = 1;
  P.x = zero_vector(1);
  P.f = affine_fn(zero_vector(1), 0);
  P.G.push_back(affine_fn(zero_vector(1), 0));
  P.H.push_back(affine_fn(zero_vector(1), 0));
  validate(P);
  const MultiplierSet lam1 = build_multiplier_set(P, 1, zero_vector(1), MultVariant::Limiting);

  const ConeUnion limiting = qec_limiting_normal(vec({0, 0}));
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    const Rational a = Rational(static_cast<long>(rng() % 13) - 6) / 2;
    const Rational b = Rational(static_cast<long>(rng() % 13) - 6) / 2;
    const bool direct = (sign(a) > 0 && sign(b) > 0) || sign(a * b) == 0;
    CHECK(membership(lam1, make_rvector({a, b})) == direct);
    CHECK(limiting.contains(make_rvector({a, b})) == direct);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("without complementarity pairs both variants coincide") {
  std::mt19937_64 rng(43);
  GenOptions opt;
  opt.max_q = 0;
  int evaluated = 0;
  for (int rounds = 0; evaluated < 100 && rounds < 2000; ++rounds) {
    const MpecPoint P = random_point(rng, opt);
    for (int lambda0 : {1, 0}) {
      const MultiplierSet lim =
          build_multiplier_set(P, lambda0, zero_vector(P.n), MultVariant::Limiting);
      const MultiplierSet reg =
          build_multiplier_set(P, lambda0, zero_vector(P.n), MultVariant::Regular);
      CHECK(lim.branches.size() == 1);
      CHECK(reg.branches.size() == 1);
      CHECK(set_empty(lim) == set_empty(reg));
      for (const RVector& m : sample_members(lim, rng, 2)) CHECK(membership(reg, m));
      for (const RVector& m : sample_members(reg, rng, 2)) CHECK(membership(lim, m));
    }
    ++evaluated;
  }
  CHECK(evaluated >= 100);
}
