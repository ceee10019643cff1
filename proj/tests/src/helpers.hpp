#ifndef STATCERT_TEST_HELPERS_HPP
#define STATCERT_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "statcert/corpus.hpp"
#include "statcert/lp.hpp"
#include "statcert/mpec.hpp"
#include "statcert/multipliers.hpp"
#include "statcert/rational.hpp"

namespace statcert::testing {

inline RVector vec(std::initializer_list<long> xs) {
  RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v[i++] = Rational(x);
  return v;
}

inline RVector vecq(std::initializer_list<const char*> xs) {
  RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const char* x : xs) v[i++] = parse_rational(x);
  return v;
}

inline MpecPoint corpus_point(const std::string& name) {
  return corpus_problem(name).point;
}

inline FunctionData affine_fn(const RVector& grad, const Rational& value) {
  FunctionData f;
  f.value = value;
  f.gradient = grad;
  f.affine = true;
  return f;
}

/*
 * Sample members of a multiplier set: optimize a few random small-integer
 * objectives over every query branch and keep the optimal points (plus a
 * point pushed along the improving ray when a branch is unbounded).  Every
 * returned vector passes the set's own membership test by construction of
 * the query branches.
 */
inline std::vector<RVector> sample_members(const MultiplierSet& set, std::mt19937_64& rng,
                                           int per_branch) {
  std::vector<RVector> out;
  const long dim = set.dim();
  for (const MultiplierSet::QueryBranch& qb : set.query_branches) {
    for (int t = 0; t < per_branch; ++t) {
      RVector c(dim);
      for (long i = 0; i < dim; ++i)
        c[i] = Rational(static_cast<long>(rng() % 5) - 2);
      const LpOutcome res = lp_solve(c, t % 2 ? Sense::Maximize : Sense::Minimize, qb.sys);
      if (res.status == LpStatus::Optimal) {
        out.push_back(*res.point);
      } else if (res.status == LpStatus::Unbounded && res.ray) {
        const LpOutcome feas = lp_feasible(qb.sys);
        if (feas.status == LpStatus::Optimal && feas.point)
          out.push_back(RVector(*feas.point + *res.ray));
      }
    }
  }
  return out;
}

}  // namespace statcert::testing

#endif
