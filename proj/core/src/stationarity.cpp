#include "statcert/stationarity.hpp"

#include <algorithm>

#include "statcert/errors.hpp"
#include "statcert/rays.hpp"
#include "statcert/second_order.hpp"

namespace statcert {

namespace {

void add_generator(std::vector<GeneratorRay>& out, const RVector& u,
                   const std::vector<long>& provenance, bool lin) {
    std::optional<RVector> nu = normalize_ray(u);
    if (!nu) return;
    for (const GeneratorRay& g : out)
        if (same_direction(g.u, *nu)) return;
    out.push_back({*nu, provenance, lin});
}

}  // namespace

GeneratorSet generators_of_Tlin(const MpecPoint& P) {
    const IndexSets sets = classify_indices(P);
    GeneratorSet gen;
    for (const LinearizationBranch& br : tlin_branches(P, sets)) {
        RayBasis rb = extreme_rays(br.sys);
        for (const RVector& r : rb.rays) add_generator(gen.rays, r, br.grad_G_zero, false);
        for (const RVector& d : rb.lineality) {
            add_generator(gen.rays, d, br.grad_G_zero, true);
            add_generator(gen.rays, RVector(-d), br.grad_G_zero, true);
        }
    }
    return gen;
}

namespace {

struct Restriction {
    MpecPoint R;
    std::vector<long> ineq_idx, eq_idx, pair_idx;  // original indices, restricted order
};

Restriction restrict_to(const MpecPoint& P, std::vector<ConstraintRef> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    Restriction res;
    res.R.n = P.n;
    res.R.x = P.x;
    res.R.f = P.f;
    for (const ConstraintRef& r : subset) {
        switch (r.kind) {
            case ConstraintRef::Kind::Ineq:
                if (r.index < 0 || r.index >= P.num_g()) throw InputError("subset: bad inequality index");
                res.R.g.push_back(P.g[r.index]);
                res.ineq_idx.push_back(r.index);
                break;
            case ConstraintRef::Kind::Eq:
                if (r.index < 0 || r.index >= P.num_h()) throw InputError("subset: bad equality index");
                res.R.h.push_back(P.h[r.index]);
                res.eq_idx.push_back(r.index);
                break;
            case ConstraintRef::Kind::Pair:
                if (r.index < 0 || r.index >= P.num_pairs()) throw InputError("subset: bad pair index");
                res.R.G.push_back(P.G[r.index]);
                res.R.H.push_back(P.H[r.index]);
                res.pair_idx.push_back(r.index);
                break;
        }
    }
    return res;
}

RVector expand_multiplier(const MpecPoint& P, const Restriction& res, const RVector& lam) {
    RVector full = RVector::Zero(mult_dim(P));
    for (std::size_t k = 0; k < res.ineq_idx.size(); ++k)
        full(idx_g(P, res.ineq_idx[k])) = lam(idx_g(res.R, static_cast<long>(k)));
    for (std::size_t k = 0; k < res.eq_idx.size(); ++k)
        full(idx_h(P, res.eq_idx[k])) = lam(idx_h(res.R, static_cast<long>(k)));
    for (std::size_t k = 0; k < res.pair_idx.size(); ++k) {
        full(idx_G(P, res.pair_idx[k])) = lam(idx_G(res.R, static_cast<long>(k)));
        full(idx_H(P, res.pair_idx[k])) = lam(idx_H(res.R, static_cast<long>(k)));
    }
    return full;
}

std::vector<ConstraintRef> to_restricted_refs(const Restriction& res,
                                              const std::vector<ConstraintRef>& core) {
    std::vector<ConstraintRef> out;
    for (const ConstraintRef& r : core) {
        const std::vector<long>* pool = nullptr;
        switch (r.kind) {
            case ConstraintRef::Kind::Ineq: pool = &res.ineq_idx; break;
            case ConstraintRef::Kind::Eq: pool = &res.eq_idx; break;
            case ConstraintRef::Kind::Pair: pool = &res.pair_idx; break;
        }
        auto it = std::find(pool->begin(), pool->end(), r.index);
        if (it == pool->end()) throw InputError("core constraint not in the subset");
        out.push_back({r.kind, static_cast<long>(it - pool->begin())});
    }
    return out;
}

SubregCertificate certificate_impl(const MpecPoint& P,
                                   const std::vector<ConstraintRef>& subset,
                                   const RVector& u,
                                   const std::vector<ConstraintRef>* core_orig) {
    Restriction res = restrict_to(P, subset);
    bool all_affine = true;
    for (const FunctionData& fd : res.R.g) all_affine = all_affine && fd.affine;
    for (const FunctionData& fd : res.R.h) all_affine = all_affine && fd.affine;
    for (const FunctionData& fd : res.R.G) all_affine = all_affine && fd.affine;
    for (const FunctionData& fd : res.R.H) all_affine = all_affine && fd.affine;
    SubregCertificate cert;
    if (all_affine) {
        cert.kind = SubregCertificate::Kind::Polyhedral;
        cert.detail = "every member affine, hence subregular at every point of the graph";
        return cert;
    }

    std::vector<ConstraintRef> core_r =
        core_orig ? to_restricted_refs(res, *core_orig) : default_core_set(res.R);
    std::sort(core_r.begin(), core_r.end());
    core_r.erase(std::unique(core_r.begin(), core_r.end()), core_r.end());
    const bool conditional = core_orig && core_r != default_core_set(res.R);
    const std::string cond =
        conditional ? "; conditional on subregularity of the non-core members" : "";

    MultiplierSet M0 = build_multiplier_set(res.R, 0, u, MultVariant::Limiting, core_r);
    if (set_empty(M0)) {
        cert.kind = SubregCertificate::Kind::FirstOrder;
        cert.detail = "abnormal directional multiplier set is empty" + cond;
        return cert;
    }

    QuadraticFormSpec form = quadratic_form_vector(res.R, u);
    for (long c : form.missing) {
        if (!coordinate_always_zero(M0, c)) {
            cert.kind = SubregCertificate::Kind::Unavailable;
            cert.detail = "Hessian missing for a member whose multiplier can be nonzero";
            return cert;
        }
    }

    std::optional<Rational> best;
    RVector best_point;
    for (const auto& qb : M0.query_branches) {
        LpOutcome out = lp_solve(form.c, Sense::Maximize, qb.sys);
        if (out.status == LpStatus::Infeasible) continue;
        if (out.status == LpStatus::Unbounded) {
            cert.kind = SubregCertificate::Kind::None;
            cert.detail = "quadratic form unbounded above on a branch; inconclusive";
            return cert;
        }
        if (!best || *out.value > *best) {
            best = out.value;
            best_point = *out.point;
        }
    }
    // set_empty was false, so some branch was feasible
    cert.value = best;
    cert.witness = expand_multiplier(P, res, best_point);
    if (*best < 0) {
        cert.kind = SubregCertificate::Kind::SecondOrder;
        cert.detail = "quadratic form negative over the whole abnormal set" + cond;
    } else {
        cert.kind = SubregCertificate::Kind::None;
        cert.detail = "nonnegative form value attained; inconclusive, not a disproof";
    }
    return cert;
}

}  // namespace

SubregCertificate subregularity_certificate(const MpecPoint& P,
                                            const std::vector<ConstraintRef>& subset,
                                            const RVector& u) {
    return certificate_impl(P, subset, u, nullptr);
}

SubregCertificate subregularity_certificate(const MpecPoint& P,
                                            const std::vector<ConstraintRef>& subset,
                                            const RVector& u,
                                            const std::vector<ConstraintRef>& core) {
    return certificate_impl(P, subset, u, &core);
}

WdmscqReport wdmscq_report(const MpecPoint& P) {
    const GeneratorSet gen = generators_of_Tlin(P);
    const std::vector<ConstraintRef> all = all_constraints(P);
    WdmscqReport rep;
    rep.confirmed = true;
    for (const GeneratorRay& g : gen.rays) {
        SubregCertificate cert = subregularity_certificate(P, all, g.u);
        rep.confirmed = rep.confirmed && cert.certified();
        rep.per_generator.emplace_back(g, cert);
    }
    return rep;
}

StationarityReport classify(const MpecPoint& P, const std::vector<RVector>& extra_directions) {
    const IndexSets sets = classify_indices(P);
    const RVector zero = RVector::Zero(P.n);
    StationarityReport rep;

    rep.s_stationary = !set_empty(build_multiplier_set(P, 1, zero, MultVariant::Regular));
    rep.m_stationary = !set_empty(build_multiplier_set(P, 1, zero, MultVariant::Limiting));

    rep.linearized_b = true;
    for (const LinearizationBranch& br : tlin_branches(P, sets)) {
        LpOutcome out = lp_solve(P.f.gradient, Sense::Minimize, br.sys);
        if (out.status == LpStatus::Unbounded) rep.linearized_b = false;
    }

    const GeneratorSet gen = generators_of_Tlin(P);
    std::vector<RVector> dirs;
    for (const GeneratorRay& g : gen.rays) dirs.push_back(g.u);
    for (const RVector& u : extra_directions) {
        if (u.size() != P.n) throw InputError("extra direction has wrong dimension");
        bool dup = false;
        for (const RVector& v : dirs)
            if (same_direction(v, u)) { dup = true; break; }
        if (!dup && !is_zero(u)) dirs.push_back(u);
    }

    rep.extended_m.verdict = true;
    for (const RVector& u : dirs) {
        DirectionResult dr;
        dr.u = u;
        dr.in_tlin = tlin_contains(P, sets, u);
        dr.in_critical = dr.in_tlin && critical_contains(P, sets, u);
        if (dr.in_critical) {
            SetQueryResult q = query(build_multiplier_set(P, 1, u, MultVariant::Limiting));
            dr.status = q.status;
            if (q.status == SetStatus::Empty) {
                rep.extended_m.verdict = false;
                if (!rep.extended_m.failing_direction) rep.extended_m.failing_direction = u;
            }
        }
        rep.extended_m.per_direction.push_back(dr);
    }

    rep.wdmscq = wdmscq_report(P);

    rep.notes.push_back(
        "linearized B-stationarity coincides with B-stationarity only under the dual "
        "Guignard qualification, which this tool does not verify");
    rep.notes.push_back(
        "linearized B-stationarity and the extended M test on the generator set are "
        "equivalent unconditionally");
    if (!rep.wdmscq.confirmed)
        rep.notes.push_back(
            "uncertified generators are inconclusive, not subregularity counterexamples");
    return rep;
}

}  // namespace statcert
