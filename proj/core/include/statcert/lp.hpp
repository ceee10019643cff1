#ifndef STATCERT_LP_HPP
#define STATCERT_LP_HPP

#include "statcert/rational.hpp"

#include <optional>
#include <vector>

namespace statcert {

struct LinRow {
    RVector a;
    Rational b;
};

/** Finite system { x : a·x = b (eq), a·x <= b (ineq) } over R^dim. */
struct LinearSystem {
    Eigen::Index dim = 0;
    std::vector<LinRow> eq;
    std::vector<LinRow> ineq;

    LinearSystem() = default;
    explicit LinearSystem(Eigen::Index n) : dim(n) {}

    void add_eq(const RVector& a, const Rational& b);
    void add_ineq(const RVector& a, const Rational& b);
    bool contains(const RVector& x) const;
    /** All rows with zero right-hand side? (cone check) */
    bool homogeneous() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Minimize, Maximize };

/**
 * Exact LP result. Certificate conventions, with s = +1 for Minimize and
 * s = -1 for Maximize:
 *
 *   Optimal:    s*c + sum_i dual_eq_i a_eq_i + sum_k dual_ineq_k a_in_k = 0,
 *               dual_ineq >= 0, dual_ineq_k (b_k - a_k.x) = 0 per row, and
 *               s*value = -(dual_eq.b_eq + dual_ineq.b_in).
 *   Infeasible: dual_ineq >= 0, sum dual_eq a_eq + sum dual_ineq a_in = 0,
 *               dual_eq.b_eq + dual_ineq.b_in < 0  (Farkas witness).
 *   Unbounded:  ray r with a_eq.r = 0, a_in.r <= 0 and s*c.r < 0.
 *
 * Every solve verifies its own certificate before returning.
 */
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::optional<Rational> value;
    std::optional<RVector> point;
    std::optional<RVector> dual_eq;
    std::optional<RVector> dual_ineq;
    std::optional<RVector> ray;
};

LpOutcome lp_solve(const RVector& objective, Sense sense, const LinearSystem& sys);

/** Feasibility probe: lp_solve with a zero objective. */
LpOutcome lp_feasible(const LinearSystem& sys);

}  // namespace statcert

#endif
