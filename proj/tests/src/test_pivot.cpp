#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "statcert/errors.hpp"
#include "statcert/pivot.hpp"
#include "statcert/report.hpp"

using namespace statcert;
using namespace statcert::testing;

TEST_CASE("active gradient rank") {
  CHECK(rank_r(corpus_point("example6")) == 3);
  CHECK(rank_r(corpus_point("example5")) == 3);
  CHECK(rank_r(corpus_point("m_not_strong_m")) == 2);
}

TEST_CASE("working set validation") {
  const MpecPoint P = corpus_point("example5");
  // the pair must appear on at least one side
  CHECK_THROWS_AS((void)WorkingSet::construct(P, {0, 1}, {}, {}), InputError);
  // cardinality must match the active rank
  CHECK_THROWS_AS((void)WorkingSet::construct(P, {0, 1}, {0}, {0}), InputError);
  CHECK_THROWS_AS((void)WorkingSet::construct(P, {5}, {0}, {0}), InputError);
  // the selected gradients must be independent
  MpecPoint D;
  D.n = 2;
  D.x = zero_vector(2);
  D.f = affine_fn(zero_vector(2), 0);
  D.g.push_back(affine_fn(vec({1, 0}), 0));
  D.g.push_back(affine_fn(vec({2, 0}), 0));
  D.g.push_back(affine_fn(vec({0, 1}), 0));
  validate(D);
  CHECK(rank_r(D) == 2);
  CHECK_THROWS_AS((void)WorkingSet::construct(D, {0, 1}, {}, {}), InputError);
  CHECK(WorkingSet::construct(D, {0, 2}, {}, {}).J_g == (std::vector<long>{0, 2}));

  const WorkingSet ok = WorkingSet::construct(P, {0}, {0}, {0});
  CHECK(ok.J_g == std::vector<long>{0});
}

TEST_CASE("initial working set search is deterministic") {
  const std::optional<WorkingSet> J = find_initial_working_set(corpus_point("example5"));
  REQUIRE(J);
  CHECK(J->J_g == std::vector<long>{0});
  CHECK(J->J_G == std::vector<long>{0});
  CHECK(J->J_H == std::vector<long>{0});
}

TEST_CASE("pivot run with a pinned perturbation") {
  const MpecPoint P = corpus_point("example5");
  const WorkingSet J0 = WorkingSet::construct(P, {0}, {0}, {0});
  Perturbation b;
  b.bg = vec({0, 1});
  b.bG = vec({0});
  b.bH = vec({0});
  const PivotOutcome out = pivot_with_b(P, J0, b);

  CHECK(out.kind == PivotOutcome::Kind::DescentDirection);
  REQUIRE(out.descent);
  CHECK(vec_equal(*out.descent, vec({0, 1, 1})));
  REQUIRE(out.trace.size() == 2);

  const PivotCycle& c0 = out.trace[0];
  CHECK(vec_equal(c0.lambda, vecq({"-2", "0", "3", "1"})));
  CHECK(c0.drop_block == 0);
  CHECK(c0.drop_index == 0);
  CHECK(vec_equal(c0.d, vecq({"0", "0", "1/2"})));
  REQUIRE(c0.step);
  CHECK(*c0.step == Rational(2));
  CHECK(*c0.enter_block == 0);
  CHECK(*c0.enter_index == 1);
  CHECK(vec_equal(c0.u_after, vec({0, 0, 1})));

  const PivotCycle& c1 = out.trace[1];
  CHECK(c1.J.J_g == std::vector<long>{1});
  CHECK(vec_equal(c1.lambda, vecq({"0", "2", "1", "-1"})));
  CHECK(c1.drop_block == 2);
  CHECK(c1.drop_index == 0);
  CHECK(vec_equal(c1.d, vec({0, 1, 1})));
  CHECK(!c1.step);

  CHECK(trace_line(P, c0) ==
        "cycle: J = ({1}, {1}, {1}), lambda = g: (-2, 0), h: (), G: (3), H: (1), "
        "drop g1, d = (0, 0, 1/2), step 2, enter g2, u = (0, 0, 1)");
  CHECK(trace_line(P, c1) ==
        "cycle: J = ({2}, {1}, {1}), lambda = g: (0, 2), h: (), G: (1), H: (-1), "
        "drop H1, d = (0, 1, 1), unbounded step");
}

TEST_CASE("strong stationarity certificate on the curved instance") {
  const MpecPoint P = corpus_point("example6");
  const WorkingSet J = WorkingSet::construct(P, {0, 1}, {0}, {});
  const RVector lam = lambda_of(P, J);
  CHECK(vec_equal(lam, vecq({"3/4", "1/4", "-2", "0"})));
  CHECK(verify_strong_m(P, J, lam));

  RVector tampered = lam;
  tampered[3] = Rational(1);
  CHECK(!verify_strong_m(P, J, tampered));
}

TEST_CASE("certificate check rejects an M-only multiplier") {
  const MpecPoint P = corpus_point("m_not_strong_m");
  const WorkingSet J = WorkingSet::construct(P, {}, {0}, {0});
  const RVector lam = lambda_of(P, J);
  CHECK(vec_equal(lam, vec({-1, 0})));
  CHECK(!verify_strong_m(P, J, lam));
  // the run must instead uncover a descent direction
  const PivotOutcome out = pivot(P, J, 1);
  CHECK(out.kind == PivotOutcome::Kind::DescentDirection);
  REQUIRE(out.descent);
  CHECK(vec_equal(*out.descent, vec({1, 0})));
}

TEST_CASE("pivot runs are reproducible per seed") {
  const MpecPoint P = corpus_point("example5");
  const WorkingSet J0 = *find_initial_working_set(P);
  const PivotOutcome a = pivot(P, J0, 7);
  const PivotOutcome c = pivot(P, J0, 7);
  CHECK(a.kind == c.kind);
  REQUIRE(a.trace.size() == c.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(vec_equal(a.trace[i].lambda, c.trace[i].lambda));
    CHECK(vec_equal(a.trace[i].d, c.trace[i].d));
  }
}

TEST_CASE("descent directions are linearization-feasible strict descents") {
  for (const char* name : {"example5", "m_not_strong_m"}) {
    const MpecPoint P = corpus_point(name);
    const std::optional<WorkingSet> J0 = find_initial_working_set(P);
    REQUIRE(J0);
    const PivotOutcome out = pivot(P, *J0, 1);
    if (out.kind != PivotOutcome::Kind::DescentDirection) continue;
    const IndexSets sets = classify_indices(P);
    CHECK(tlin_contains(P, sets, *out.descent));
    Rational slope = 0;
    for (long j = 0; j < P.n; ++j) slope += P.f.gradient[j] * (*out.descent)[j];
    CHECK(slope == Rational(-1));
  }
}

TEST_CASE("strong outcomes are members of the limiting set") {
  const MpecPoint P = corpus_point("example6");
  const std::optional<WorkingSet> J0 = find_initial_working_set(P);
  REQUIRE(J0);
  const PivotOutcome out = pivot(P, *J0, 1);
  CHECK(out.kind == PivotOutcome::Kind::StronglyM);
  CHECK(verify_strong_m(P, out.J, out.lambda));
  CHECK(membership(build_multiplier_set(P, 1, zero_vector(P.n), MultVariant::Limiting),
                   out.lambda));
}
