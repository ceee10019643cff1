#include "statcert/cones.hpp"

#include "statcert/errors.hpp"

#include <algorithm>

namespace statcert {

ConeUnion tangent_cone(const PolyUnion& omega, const RVector& x) {
    ConeUnion out(omega.dim);
    for (auto i : omega.pieces_at(x)) out.add(omega.pieces[i].tangent_at(x));
    out.canonicalize();
    return out;
}

ConePiece frechet_normal_cone(const PolyUnion& omega, const RVector& x) {
    const auto members = omega.pieces_at(x);
    if (members.empty()) throw InputError("regular normal cone requested off the union");
    LinearSystem hrep(omega.dim);
    for (auto i : members) {
        const LinearSystem piece =
            conic_hull_hrep(omega.pieces[i].normal_generators_at(x), omega.dim);
        for (const auto& r : piece.eq) hrep.add_eq(r.a, 0);
        for (const auto& r : piece.ineq) hrep.add_ineq(r.a, 0);
    }
    ConePiece out;
    out.hrep = std::move(hrep);
    out.vrep = extreme_rays(out.hrep);
    return out;
}

namespace {

// Tangent-of-tangent data of one piece: equality rows always stay active,
// `act` collects the inequality rows of T(x;piece) that vanish on u.
struct PieceCtx {
    std::vector<RVector> eqs;
    std::vector<RVector> act;
};

// One enumeration choice for a piece: either a face (subset of `act` that is
// tight) or an excluded-piece witness row that must become strictly positive.
struct Option {
    bool included = true;
    std::vector<std::size_t> face;
    RVector violated;
};

std::vector<PieceCtx> tangent_contexts(const PolyUnion& omega, const RVector& x,
                                       const RVector& u) {
    std::vector<PieceCtx> out;
    for (auto i : omega.pieces_at(x)) {
        const LinearSystem t = omega.pieces[i].tangent_at(x);
        if (!t.contains(u)) continue;
        PieceCtx ctx;
        for (const auto& r : t.eq) ctx.eqs.push_back(r.a);
        for (const auto& r : t.ineq)
            if (r.a.dot(u) == 0) ctx.act.push_back(r.a);
        out.push_back(std::move(ctx));
    }
    return out;
}

std::vector<Option> piece_options(const PieceCtx& ctx) {
    std::vector<Option> opts;
    const std::size_t na = ctx.act.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << na); ++mask) {
        Option o;
        o.included = true;
        for (std::size_t j = 0; j < na; ++j)
            if (mask & (std::size_t{1} << j)) o.face.push_back(j);
        opts.push_back(std::move(o));
    }
    for (std::size_t j = 0; j < na; ++j) {
        Option o;
        o.included = false;
        o.violated = ctx.act[j];
        opts.push_back(std::move(o));
    }
    for (const auto& e : ctx.eqs) {
        Option plus;
        plus.included = false;
        plus.violated = e;
        opts.push_back(std::move(plus));
        Option minus;
        minus.included = false;
        minus.violated = -e;
        opts.push_back(std::move(minus));
    }
    return opts;
}

LinearSystem pattern_piece(const std::vector<PieceCtx>& ctxs,
                           const std::vector<const Option*>& choice, Eigen::Index n) {
    LinearSystem hrep(n);
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        if (!choice[i]->included) continue;
        RayBasis gens;
        for (auto j : choice[i]->face) {
            if (auto r = normalize_ray(ctxs[i].act[j])) gens.rays.push_back(*r);
        }
        for (const auto& e : ctxs[i].eqs) {
            if (auto r = normalize_ray(e)) gens.lineality.push_back(*r);
        }
        const LinearSystem h = conic_hull_hrep(gens, n);
        for (const auto& r : h.eq) hrep.add_eq(r.a, 0);
        for (const auto& r : h.ineq) hrep.add_ineq(r.a, 0);
    }
    return hrep;
}

bool realizable_by_slack(const std::vector<PieceCtx>& ctxs,
                         const std::vector<const Option*>& choice, Eigen::Index n) {
    // Variables (v, s); all pattern rows are homogeneous, so the optimum of
    // s under s <= 1 is exactly 1 when a strictly satisfying v exists.
    LinearSystem sys(n + 1);
    auto lift = [n](const RVector& a, const Rational& scoef) {
        RVector row = zero_vector(n + 1);
        row.head(n) = a;
        row(n) = scoef;
        return row;
    };
    RVector bound = zero_vector(n + 1);
    bound(n) = 1;
    sys.add_ineq(bound, 1);
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        const Option& o = *choice[i];
        if (o.included) {
            for (const auto& e : ctxs[i].eqs) sys.add_eq(lift(e, 0), 0);
            std::vector<bool> tight(ctxs[i].act.size(), false);
            for (auto j : o.face) tight[j] = true;
            for (std::size_t j = 0; j < ctxs[i].act.size(); ++j) {
                if (tight[j])
                    sys.add_eq(lift(ctxs[i].act[j], 0), 0);
                else
                    sys.add_ineq(lift(ctxs[i].act[j], 1), 0);
            }
        } else {
            sys.add_ineq(lift(-o.violated, 1), 0);
        }
    }
    const auto lp = lp_solve(bound, Sense::Maximize, sys);
    return lp.status == LpStatus::Optimal && *lp.value > 0;
}

bool realizable_by_rows(const std::vector<PieceCtx>& ctxs,
                        const std::vector<const Option*>& choice, Eigen::Index n) {
    // Nonstrict closure plus a bounding box; every strict row must then be
    // individually improvable below zero, which by convexity is enough.
    LinearSystem closure(n);
    std::vector<RVector> strict;
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
        const Option& o = *choice[i];
        if (o.included) {
            for (const auto& e : ctxs[i].eqs) closure.add_eq(e, 0);
            std::vector<bool> tight(ctxs[i].act.size(), false);
            for (auto j : o.face) tight[j] = true;
            for (std::size_t j = 0; j < ctxs[i].act.size(); ++j) {
                if (tight[j]) {
                    closure.add_eq(ctxs[i].act[j], 0);
                } else {
                    closure.add_ineq(ctxs[i].act[j], 0);
                    strict.push_back(ctxs[i].act[j]);
                }
            }
        } else {
            closure.add_ineq(-o.violated, 0);
            strict.push_back(RVector(-o.violated));
        }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        RVector e = zero_vector(n);
        e(j) = 1;
        closure.add_ineq(e, 1);
        closure.add_ineq(RVector(-e), 1);
    }
    for (const auto& s : strict) {
        const auto lp = lp_solve(s, Sense::Minimize, closure);
        if (lp.status != LpStatus::Optimal || *lp.value >= 0) return false;
    }
    return true;
}

template <typename Realizable>
ConeUnion enumerate_patterns(const std::vector<PieceCtx>& ctxs, Eigen::Index n,
                             Realizable&& realizable) {
    ConeUnion out(n);
    if (ctxs.empty()) return out;
    std::vector<std::vector<Option>> options;
    for (const auto& ctx : ctxs) options.push_back(piece_options(ctx));
    std::vector<std::size_t> idx(ctxs.size(), 0);
    for (;;) {
        std::vector<const Option*> choice;
        bool any_included = false;
        for (std::size_t i = 0; i < ctxs.size(); ++i) {
            choice.push_back(&options[i][idx[i]]);
            any_included = any_included || choice.back()->included;
        }
        if (any_included && realizable(ctxs, choice, n))
            out.add(pattern_piece(ctxs, choice, n));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    out.canonicalize();
    return out;
}

}  // namespace

ConeUnion directional_limiting_normal_cone(const PolyUnion& omega, const RVector& x,
                                           const RVector& u) {
    if (!omega.contains(x)) return ConeUnion(omega.dim);
    const auto ctxs = tangent_contexts(omega, x, u);
    return enumerate_patterns(ctxs, omega.dim,
                              [](const std::vector<PieceCtx>& c,
                                 const std::vector<const Option*>& pick, Eigen::Index n) {
                                  return realizable_by_slack(c, pick, n);
                              });
}

ConeUnion limiting_normal_cone_bruteforce(const PolyUnion& omega, const RVector& x) {
    if (!omega.contains(x)) return ConeUnion(omega.dim);
    const auto ctxs = tangent_contexts(omega, x, zero_vector(omega.dim));
    return enumerate_patterns(ctxs, omega.dim,
                              [](const std::vector<PieceCtx>& c,
                                 const std::vector<const Option*>& pick, Eigen::Index n) {
                                  return realizable_by_rows(c, pick, n);
                              });
}

}  // namespace statcert
