#include "statcert/second_order.hpp"

#include <utility>

#include "statcert/cones.hpp"
#include "statcert/errors.hpp"
#include "statcert/rays.hpp"

namespace statcert {

QuadraticFormSpec quadratic_form_vector(const MpecPoint& P, const RVector& u) {
    if (u.size() != P.n) throw InputError("direction has wrong dimension");
    QuadraticFormSpec s;
    s.direction = u;
    s.c = RVector::Zero(mult_dim(P));

    auto form_of = [&](const FunctionData& fd) -> std::optional<Rational> {
        if (fd.affine) return Rational(0);
        if (!fd.hessian) return std::nullopt;
        return Rational(u.dot((*fd.hessian) * u));
    };

    if (auto v = form_of(P.f))
        s.f_term = *v;
    else
        s.f_available = false;
    for (long i = 0; i < P.num_g(); ++i) {
        if (auto v = form_of(P.g[i])) s.c(idx_g(P, i)) = *v;
        else s.missing.push_back(idx_g(P, i));
    }
    for (long i = 0; i < P.num_h(); ++i) {
        if (auto v = form_of(P.h[i])) s.c(idx_h(P, i)) = *v;
        else s.missing.push_back(idx_h(P, i));
    }
    for (long i = 0; i < P.num_pairs(); ++i) {
        if (auto v = form_of(P.G[i])) s.c(idx_G(P, i)) = -*v;
        else s.missing.push_back(idx_G(P, i));
        if (auto v = form_of(P.H[i])) s.c(idx_H(P, i)) = -*v;
        else s.missing.push_back(idx_H(P, i));
    }
    return s;
}

namespace {

void require_critical(const MpecPoint& P, const IndexSets& sets, const RVector& u) {
    if (u.size() != P.n) throw InputError("direction has wrong dimension");
    if (!tlin_contains(P, sets, u) || !critical_contains(P, sets, u))
        throw InputError("direction is not critical");
}

// Sup of the form over the lambda0-level directional limiting set is >= 0
// exactly when a point with nonnegative value exists.
Lambda0Check check_sup(const MpecPoint& P, const QuadraticFormSpec& form, int lambda0,
                       const RVector& u) {
    const MultiplierSet S = build_multiplier_set(P, lambda0, u, MultVariant::Limiting);
    Lambda0Check c;
    if (set_empty(S)) {
        c.status = CheckStatus::Empty;
        return c;
    }
    if (lambda0 == 1 && !form.f_available) {
        c.status = CheckStatus::Unavailable;
        return c;
    }
    for (long coord : form.missing) {
        if (!coordinate_always_zero(S, coord)) {
            c.status = CheckStatus::Unavailable;
            return c;
        }
    }
    const Rational base = Rational(lambda0) * form.f_term;
    if (auto w = point_with_value_at_least(S, form.c, -base)) {
        c.status = CheckStatus::Holds;
        c.witness = w;
        c.value = base + form.c.dot(*w);
    } else {
        c.status = CheckStatus::SupNegative;
    }
    return c;
}

bool check_failed(CheckStatus s) {
    return s == CheckStatus::Empty || s == CheckStatus::SupNegative;
}

}  // namespace

NecessaryVerdict necessary_so(const MpecPoint& P, const RVector& u) {
    const IndexSets sets = classify_indices(P);
    require_critical(P, sets, u);

    NecessaryVerdict V;
    V.u = u;
    const QuadraticFormSpec form = quadratic_form_vector(P, u);
    V.with_lambda1 = check_sup(P, form, 1, u);
    V.with_lambda0 = check_sup(P, form, 0, u);
    V.subreg = subregularity_certificate(P, all_constraints(P), u);
    V.lambda1_decisive = V.subreg.certified();

    using Outcome = NecessaryVerdict::Outcome;
    if (V.lambda1_decisive) {
        V.note = "direction certified subregular, so the lambda0 = 1 check decides";
        if (V.with_lambda1.status == CheckStatus::Holds)
            V.outcome = Outcome::Holds;
        else if (check_failed(V.with_lambda1.status))
            V.outcome = Outcome::Violated;
        else
            V.outcome = Outcome::Unavailable;
    } else {
        if (V.with_lambda1.status == CheckStatus::Holds ||
            V.with_lambda0.status == CheckStatus::Holds)
            V.outcome = Outcome::Holds;
        else if (check_failed(V.with_lambda1.status) && check_failed(V.with_lambda0.status))
            V.outcome = Outcome::Violated;
        else
            V.outcome = Outcome::Unavailable;
    }
    return V;
}

namespace {

// First point with form value > 0, searching every branch.
std::optional<std::pair<RVector, Rational>> positive_witness(const MultiplierSet& S,
                                                             const QuadraticFormSpec& form,
                                                             int lambda0) {
    const Rational base = Rational(lambda0) * form.f_term;
    for (const auto& qb : S.query_branches) {
        LpOutcome out = lp_solve(form.c, Sense::Maximize, qb.sys);
        if (out.status == LpStatus::Optimal && base + *out.value > 0)
            return std::make_pair(*out.point, base + *out.value);
        if (out.status == LpStatus::Unbounded) {
            LinearSystem sys = qb.sys;
            sys.add_ineq(RVector(-form.c), base - 1);  // form value >= 1
            LpOutcome w = lp_feasible(sys);
            // unbounded above on a feasible branch, so this must be feasible
            return std::make_pair(*w.point, base + form.c.dot(*w.point));
        }
    }
    return std::nullopt;
}

// Worst (smallest) form value over all branches; Fails on any value <= 0 or
// unbounded-below branch.
SufficientDirection::Outcome infimum_positive(const MultiplierSet& S,
                                              const QuadraticFormSpec& form,
                                              SufficientDirection& d) {
    using Outcome = SufficientDirection::Outcome;
    if (!form.f_available) return Outcome::Unavailable;
    for (long coord : form.missing)
        if (!coordinate_always_zero(S, coord)) return Outcome::Unavailable;
    const Rational base = form.f_term;
    bool any = false;
    for (const auto& qb : S.query_branches) {
        LpOutcome out = lp_solve(form.c, Sense::Minimize, qb.sys);
        if (out.status == LpStatus::Infeasible) continue;
        if (out.status == LpStatus::Unbounded) {
            LinearSystem sys = qb.sys;
            sys.add_ineq(form.c, -base);  // form value <= 0
            LpOutcome w = lp_feasible(sys);
            d.witness = w.point;
            d.value = base + form.c.dot(*w.point);
            return Outcome::Fails;
        }
        any = true;
        const Rational v = base + *out.value;
        if (v <= 0) {
            d.witness = out.point;
            d.value = v;
            return Outcome::Fails;
        }
        if (!d.value || v < *d.value) {
            d.value = v;
            d.witness = out.point;
        }
    }
    return any ? Outcome::Holds : Outcome::Inapplicable;
}

}  // namespace

SufficientReport sufficient_so(const MpecPoint& P, const std::vector<RVector>& directions,
                               SufficientMode mode, bool use_limiting) {
    const IndexSets sets = classify_indices(P);
    for (const RVector& u : directions) {
        require_critical(P, sets, u);
        if (is_zero(u)) throw InputError("directions must be nonzero");
    }

    SufficientReport rep;
    rep.mode = mode;
    rep.use_limiting = use_limiting;

    // The uniform mode needs every supplied direction to carry a limiting
    // multiplier; one empty set makes the whole mode inapplicable.
    std::optional<RVector> gate_failure;
    if (mode == SufficientMode::Uniform) {
        for (const RVector& u : directions) {
            if (set_empty(build_multiplier_set(P, 1, u, MultVariant::Limiting))) {
                gate_failure = u;
                break;
            }
        }
    }
    bool ssosc_gate_ok = true;
    if (mode == SufficientMode::Ssosc)
        ssosc_gate_ok =
            !set_empty(build_multiplier_set(P, 1, RVector::Zero(P.n), MultVariant::Limiting));

    rep.all_hold = !directions.empty();
    for (const RVector& u : directions) {
        SufficientDirection d;
        d.u = u;
        using Outcome = SufficientDirection::Outcome;
        const QuadraticFormSpec form = quadratic_form_vector(P, u);
        switch (mode) {
            case SufficientMode::Existence: {
                const MultVariant variant =
                    use_limiting ? MultVariant::Limiting : MultVariant::Regular;
                bool any_unavailable = false;
                d.outcome = Outcome::Fails;
                for (int lambda0 : {1, 0}) {
                    MultiplierSet S = build_multiplier_set(P, lambda0, u, variant);
                    if (set_empty(S)) continue;
                    if (lambda0 == 1 && !form.f_available) {
                        any_unavailable = true;
                        continue;
                    }
                    bool missing_live = false;
                    for (long coord : form.missing)
                        if (!coordinate_always_zero(S, coord)) { missing_live = true; break; }
                    if (missing_live) {
                        any_unavailable = true;
                        continue;
                    }
                    if (auto w = positive_witness(S, form, lambda0)) {
                        d.outcome = Outcome::Holds;
                        d.lambda0 = lambda0;
                        d.witness = w->first;
                        d.value = w->second;
                        break;
                    }
                }
                if (d.outcome != Outcome::Holds && any_unavailable) d.outcome = Outcome::Unavailable;
                break;
            }
            case SufficientMode::Uniform: {
                if (gate_failure) {
                    d.outcome = Outcome::Inapplicable;
                    d.note = "a supplied direction has an empty limiting multiplier set: " +
                             format_vector(*gate_failure);
                    break;
                }
                MultiplierSet S = build_multiplier_set(P, 1, u, MultVariant::Limiting);
                d.outcome = infimum_positive(S, form, d);
                break;
            }
            case SufficientMode::Ssosc: {
                if (!ssosc_gate_ok) {
                    d.outcome = Outcome::Inapplicable;
                    d.note = "no limiting multiplier at the point itself";
                    break;
                }
                MultiplierSet S =
                    build_multiplier_set(P, 1, RVector::Zero(P.n), MultVariant::Limiting);
                d.outcome = infimum_positive(S, form, d);
                break;
            }
        }
        rep.all_hold = rep.all_hold && d.outcome == SufficientDirection::Outcome::Holds;
        rep.per_direction.push_back(std::move(d));
    }

    if (mode == SufficientMode::Ssosc) {
        rep.global_note =
            "this condition is not sufficient for local minimality on its own; the "
            "per-direction nonemptiness of the directional multiplier sets must hold too";
        return rep;
    }

    if (!rep.all_hold || directions.empty()) {
        rep.global_note = "per-direction results only";
        return rep;
    }

    // The quantifier runs over the whole critical cone; positivity on a ray
    // covers exactly its positive scalings, so a global claim needs every
    // critical branch to be a single ray matched by a supplied direction.
    bool exhaustive = true;
    for (const LinearizationBranch& br : critical_branches(P, sets)) {
        RayBasis rb = extreme_rays(br.sys);
        if (!rb.lineality.empty() || rb.rays.size() > 1) {
            exhaustive = false;
            break;
        }
        if (rb.rays.empty()) continue;  // branch is the origin only
        bool matched = false;
        for (const RVector& u : directions)
            if (same_direction(u, rb.rays[0])) { matched = true; break; }
        if (!matched) {
            exhaustive = false;
            break;
        }
    }
    rep.essential_local_min = exhaustive;
    rep.global_note = exhaustive
                          ? "every critical branch is a single supplied ray, so the "
                            "per-direction certificates cover the whole critical cone"
                          : "supplied directions do not exhaust the critical cone; "
                            "per-direction results only";
    return rep;
}

namespace {

struct EncodedCurvature {
    RVector s;        // half of u^T grad^2 (encoded row) u, per image row
    Rational fcurv;   // half of u^T grad^2 f u
};

EncodedCurvature encoded_curvature(const MpecPoint& P, const RVector& u) {
    auto half_form = [&](const FunctionData& fd, bool negate) -> Rational {
        std::optional<RMatrix> hz = fd.hessian_or_zero(P.n);
        if (!hz) throw UnavailableError("Hessian missing for " + fd.name);
        Rational v = u.dot((*hz) * u) / 2;
        return negate ? Rational(-v) : v;
    };
    EncodedCurvature ec;
    ec.s = RVector::Zero(P.image_dim());
    long row = 0;
    for (long i = 0; i < P.num_g(); ++i) ec.s(row++) = half_form(P.g[i], false);
    for (long i = 0; i < P.num_h(); ++i) ec.s(row++) = half_form(P.h[i], false);
    for (long i = 0; i < P.num_pairs(); ++i) {
        ec.s(row++) = half_form(P.G[i], true);
        ec.s(row++) = half_form(P.H[i], true);
    }
    ec.fcurv = half_form(P.f, false);
    return ec;
}

// Pieces of the encoded constraint set containing the point value whose
// tangent cone contains the linearized direction.
std::vector<std::size_t> pieces_along(const PolyUnion& omega, const RVector& Fx,
                                      const RVector& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < omega.pieces.size(); ++i) {
        if (!omega.pieces[i].contains(Fx)) continue;
        LinearSystem T = omega.pieces[i].tangent_at(Fx);
        if (T.contains(w)) out.push_back(i);
    }
    return out;
}

}  // namespace

PrimalWitness primal_curvature_witness(const MpecPoint& P, const RVector& u) {
    const IndexSets sets = classify_indices(P);
    require_critical(P, sets, u);
    if (is_zero(u)) throw InputError("direction must be nonzero");

    const EncodedCurvature ec = encoded_curvature(P, u);
    const PolyUnion omega = encode_omega(P);
    const RMatrix J = encode_jacobian(P);
    const RVector Fx = encode_value(P);
    const RVector w = J * u;
    const bool f_active = P.f.gradient.dot(u) == 0;

    PrimalWitness rep;
    rep.pieces = pieces_along(omega, Fx, w);
    for (std::size_t i : rep.pieces) {
        const LinearSystem T = omega.pieces[i].tangent_at(Fx);
        LinearSystem sysv(P.n);
        for (const LinRow& r : T.eq)
            sysv.add_eq(RVector(J.transpose() * r.a), -r.a.dot(ec.s));
        for (const LinRow& r : T.ineq) {
            if (r.a.dot(w) != 0) continue;  // inactive at w: tangent row is free
            sysv.add_ineq(RVector(J.transpose() * r.a), -r.a.dot(ec.s));
        }
        if (f_active) sysv.add_ineq(P.f.gradient, -ec.fcurv);
        LpOutcome out = lp_feasible(sysv);
        if (out.status == LpStatus::Optimal) {
            rep.found = true;
            rep.v = out.point;
            return rep;
        }
    }
    return rep;
}

bool piecewise_dual_positivity(const MpecPoint& P, const RVector& u) {
    const IndexSets sets = classify_indices(P);
    require_critical(P, sets, u);
    if (is_zero(u)) throw InputError("direction must be nonzero");

    const EncodedCurvature ec = encoded_curvature(P, u);
    const PolyUnion omega = encode_omega(P);
    const RMatrix J = encode_jacobian(P);
    const RVector Fx = encode_value(P);
    const RVector w = J * u;
    const bool f_active = P.f.gradient.dot(u) == 0;

    const std::vector<std::size_t> pieces = pieces_along(omega, Fx, w);
    for (std::size_t i : pieces) {
        const LinearSystem T = omega.pieces[i].tangent_at(Fx);
        // columns: free coefficients on tangent equality rows, nonnegative
        // coefficients on the rows active at w, then lambda0 when the
        // objective row participates
        std::vector<const LinRow*> eq_rows, act_rows;
        for (const LinRow& r : T.eq) eq_rows.push_back(&r);
        for (const LinRow& r : T.ineq)
            if (r.a.dot(w) == 0) act_rows.push_back(&r);

        const long cols =
            static_cast<long>(eq_rows.size() + act_rows.size()) + (f_active ? 1 : 0);
        LinearSystem sys(cols);

        auto column_of = [&](long j) -> std::pair<RVector, Rational> {
            // gradient-space contribution and form coefficient of column j
            if (j < static_cast<long>(eq_rows.size())) {
                const LinRow& r = *eq_rows[j];
                return {RVector(J.transpose() * r.a), 2 * r.a.dot(ec.s)};
            }
            if (j < static_cast<long>(eq_rows.size() + act_rows.size())) {
                const LinRow& r = *act_rows[j - eq_rows.size()];
                return {RVector(J.transpose() * r.a), 2 * r.a.dot(ec.s)};
            }
            return {P.f.gradient, 2 * ec.fcurv};
        };

        // stationarity rows
        for (long t = 0; t < P.n; ++t) {
            RVector a = RVector::Zero(cols);
            for (long j = 0; j < cols; ++j) a(j) = column_of(j).first(t);
            sys.add_eq(a, 0);
        }
        // form value normalized to 1 (strict positivity up to scaling)
        {
            RVector a = RVector::Zero(cols);
            for (long j = 0; j < cols; ++j) a(j) = column_of(j).second;
            sys.add_eq(a, 1);
        }
        // sign constraints on the active-row coefficients and lambda0
        for (long j = static_cast<long>(eq_rows.size()); j < cols; ++j) {
            RVector e = RVector::Zero(cols);
            e(j) = -1;
            sys.add_ineq(e, 0);
        }

        if (lp_feasible(sys).status != LpStatus::Optimal) return false;
    }
    return true;
}

}  // namespace statcert
