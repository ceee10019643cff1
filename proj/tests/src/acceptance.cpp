// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "property_suites.hpp"
#include "statcert/cones.hpp"
#include "statcert/pivot.hpp"
#include "statcert/qec.hpp"
#include "statcert/report.hpp"
#include "statcert/second_order.hpp"
#include "statcert/stationarity.hpp"

using namespace statcert;
using namespace statcert::testing;

namespace {

int failures = 0;
std::vector<std::string> details;

void note(const std::string& what) { details.push_back(what); }

void run(int number, const std::function<bool()>& body) {
  bool ok = false;
  details.clear();
  try {
    ok = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  std::printf("criterion %d: %s\n", number, ok ? "pass" : "fail");
  if (!ok) {
    ++failures;
    for (const std::string& d : details) std::printf("  detail: %s\n", d.c_str());
  }
}

bool expect(bool cond, const std::string& what) {
  if (!cond) note(what);
  return cond;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const MpecPoint P = corpus_point("example3");
  bool ok = true;

  const SetQueryResult base =
      query(build_multiplier_set(P, 1, zero_vector(3), MultVariant::Limiting));
  ok &= expect(base.status == SetStatus::Singleton, "multiplier set is not a singleton");
  ok &= expect(base.witness && vec_equal(*base.witness, vec({1, 3, 0, -2})),
               "singleton witness is not ((1, 3), 0, -2)");
  ok &= expect(!classify(P).s_stationary && classify(P).m_stationary,
               "point is not M-but-not-S stationary");
  ok &= expect(
      set_empty(build_multiplier_set(P, 1, vec({0, 1, 1}), MultVariant::Limiting)),
      "directional set along (0, 1, 1) is not empty");
  ok &= expect(seconds_since(start) < 1.0, "exceeded one second");
  return ok;
}

bool criterion2() {
  const MpecPoint P = corpus_point("example5");
  const WorkingSet J0 = WorkingSet::construct(P, {0}, {0}, {0});
  Perturbation b;
  b.bg = vec({0, 1});
  b.bG = vec({0});
  b.bH = vec({0});
  const PivotOutcome out = pivot_with_b(P, J0, b);
  bool ok = true;
  ok &= expect(out.kind == PivotOutcome::Kind::DescentDirection,
               "run does not end in a descent direction");
  ok &= expect(out.descent && vec_equal(*out.descent, vec({0, 1, 1})),
               "descent direction is not (0, 1, 1)");
  ok &= expect(out.trace.size() == 2, "trace does not have exactly two cycles");
  if (!ok) return false;
  const std::string line0 = trace_line(P, out.trace[0]);
  const std::string line1 = trace_line(P, out.trace[1]);
  ok &= expect(line0 ==
                   "cycle: J = ({1}, {1}, {1}), lambda = g: (-2, 0), h: (), G: (3), "
                   "H: (1), drop g1, d = (0, 0, 1/2), step 2, enter g2, u = (0, 0, 1)",
               "first cycle line differs: " + line0);
  ok &= expect(line1 ==
                   "cycle: J = ({2}, {1}, {1}), lambda = g: (0, 2), h: (), G: (1), "
                   "H: (-1), drop H1, d = (0, 1, 1), unbounded step",
               "second cycle line differs: " + line1);
  return ok;
}

bool criterion3() {
  const MpecPoint P = corpus_point("example6");
  const WorkingSet J = WorkingSet::construct(P, {0, 1}, {0}, {});
  const RVector lam = lambda_of(P, J);
  bool ok = true;
  ok &= expect(vec_equal(lam, vecq({"3/4", "1/4", "-2", "0"})),
               "certificate multiplier is not ((3/4, 1/4), -2, 0)");
  ok &= expect(verify_strong_m(P, J, lam), "certificate does not verify");
  ok &= expect(set_empty(build_multiplier_set(P, 1, zero_vector(3), MultVariant::Regular)),
               "regular multiplier set is not empty");
  ok &= expect(!classify(P).s_stationary, "point reports as S-stationary");
  return ok;
}

bool criterion4() {
  bool ok = true;
  const NecessaryVerdict refute = necessary_so(corpus_point("example4_am1"), vec({1, 0}));
  ok &= expect(refute.outcome == NecessaryVerdict::Outcome::Violated,
               "necessary condition not violated for a = -1");

  const MpecPoint a1 = corpus_point("example4_a1");
  const SufficientReport suff =
      sufficient_so(a1, {vec({1, 0}), vec({0, 1})}, SufficientMode::Existence);
  ok &= expect(suff.all_hold && suff.essential_local_min,
               "essential local minimality not certified for a = 1");
  ok &= expect(suff.per_direction.size() == 2 &&
                   suff.per_direction[0].value && *suff.per_direction[0].value == Rational(2) &&
                   suff.per_direction[1].value && *suff.per_direction[1].value == Rational(1),
               "witness values are not 2 and 1");

  const IndexSets sets = classify_indices(a1);
  ok &= expect(licq_u(a1, sets, vec({0, 1})), "directional independence fails at (0, 1)");
  const SetQueryResult lim = query(build_multiplier_set(a1, 1, vec({0, 1}), MultVariant::Limiting));
  const SetQueryResult reg = query(build_multiplier_set(a1, 1, vec({0, 1}), MultVariant::Regular));
  ok &= expect(lim.status == SetStatus::Singleton && reg.status == SetStatus::Singleton,
               "directional sets at (0, 1) are not singletons");
  ok &= expect(lim.witness && reg.witness && vec_equal(*lim.witness, vec({0, -1, 0})) &&
                   vec_equal(*reg.witness, vec({0, -1, 0})),
               "directional singleton is not (0, -1, 0)");
  return ok;
}

bool criterion5() {
  const MpecPoint P = corpus_point("example2");
  const std::vector<ConstraintRef> small_core = {{ConstraintRef::Kind::Ineq, 0},
                                                 {ConstraintRef::Kind::Ineq, 1}};
  bool ok = true;
  for (int lambda0 : {1, 0}) {
    ok &= expect(set_empty(build_multiplier_set(P, lambda0, vec({1, 0}),
                                                MultVariant::Limiting, small_core)),
                 "directional set nonempty at lambda0 = " + std::to_string(lambda0));
  }
  const SubregCertificate cert = subregularity_certificate(
      P, {{ConstraintRef::Kind::Ineq, 2}}, vec({1, 0}));
  ok &= expect(cert.kind == SubregCertificate::Kind::SecondOrder,
               "certificate at the quadratic constraint is not second order");
  ok &= expect(cert.value && *cert.value == Rational(-4), "certificate value is not -4");

  const WdmscqReport wd = wdmscq_report(P);
  ok &= expect(wd.confirmed, "qualification not confirmed");
  ok &= expect(wd.per_generator.size() == 2, "generator count is not two");
  for (const auto& [gen, c] : wd.per_generator)
    ok &= expect(c.certified(), "a generator is uncertified");
  return ok;
}

bool criterion6() {
  const auto start = std::chrono::steady_clock::now();
  const PolyUnion EC = qec_union();
  bool ok = true;
  const std::vector<RVector> bases = {vec({0, 0}), vec({-1, 0}), vec({0, -1})};
  for (const RVector& a : bases) {
    ok &= expect(union_equal(qec_tangent(a), tangent_cone(EC, a)),
                 "tangent closed form differs at " + format_vector(a));
    ok &= expect(cone_equal(qec_regular_normal(a), frechet_normal_cone(EC, a)),
                 "regular normal closed form differs at " + format_vector(a));
    ok &= expect(union_equal(qec_limiting_normal(a), limiting_normal_cone_bruteforce(EC, a)),
                 "limiting closed form differs at " + format_vector(a));
    long directions = 0;
    for (long u1 = -2; u1 <= 2; ++u1) {
      for (long u2 = -2; u2 <= 2; ++u2) {
        const RVector u = vec({u1, u2});
        if (!qec_tangent(a).contains(u)) continue;
        ++directions;
        if (!union_equal(qec_directional_normal(a, u),
                         directional_limiting_normal_cone(EC, a, u))) {
          ok = expect(false, "directional closed form differs at " + format_vector(a) +
                                 " along " + format_vector(u));
        }
      }
    }
    ok &= expect(directions > 0, "no tangent directions sampled");
  }
  ok &= expect(seconds_since(start) < 10.0, "exceeded ten seconds");
  return ok;
}

bool criterion7() {
  const std::vector<SuiteOutcome> suites = {
      run_inclusion_chain(1, 200),      run_orthogonality(2, 200),
      run_qec_homogeneity(3, 200),      run_licq_abnormal(4, 200),
      run_strong_m_iff_s(5, 200),       run_dual_primal_agreement(6, 200),
      run_lp_duality(7, 200),
  };
  bool ok = true;
  for (const SuiteOutcome& s : suites) {
    ok &= expect(s.pass(200), s.name + ": " + std::to_string(s.instances) +
                                  " instances, " + std::to_string(s.failures) +
                                  " failures" +
                                  (s.first_failure.empty() ? "" : "; " + s.first_failure));
  }
  return ok;
}

bool criterion8() {
  const SuiteOutcome s = run_pivot_termination(8, 100);
  return expect(s.pass(100), s.name + ": " + std::to_string(s.instances) +
                                 " instances, " + std::to_string(s.failures) +
                                 " failures" +
                                 (s.first_failure.empty() ? "" : "; " + s.first_failure));
}

}  // namespace

int main() {
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  return failures == 0 ? 0 : 1;
}
