#include "statcert/multipliers.hpp"

#include <algorithm>
#include <set>

#include "statcert/errors.hpp"

namespace statcert {

namespace {

bool vec_has(const std::vector<long>& v, long i) {
    return std::binary_search(v.begin(), v.end(), i);
}

RVector unit(long dim, long k) {
    RVector e = RVector::Zero(dim);
    e(k) = 1;
    return e;
}

// lam_g >= 0 rows, lam pins, and Lagrangian stationarity; everything the
// branches share.  grad L = lambda0 grad f + lam_g grad g + lam_h grad h
// - lam_G grad G - lam_H grad H = 0.
LinearSystem common_system(const MpecPoint& P, const IndexSets& sets,
                           const DirIndexSets& dir, int lambda0) {
    const long l = P.num_g(), p = P.num_h(), q = P.num_pairs();
    const long dim = l + p + 2 * q;
    LinearSystem sys(dim);
    for (long t = 0; t < P.n; ++t) {
        RVector a = RVector::Zero(dim);
        for (long i = 0; i < l; ++i) a(idx_g(P, i)) = P.g[i].gradient(t);
        for (long i = 0; i < p; ++i) a(idx_h(P, i)) = P.h[i].gradient(t);
        for (long i = 0; i < q; ++i) a(idx_G(P, i)) = -P.G[i].gradient(t);
        for (long i = 0; i < q; ++i) a(idx_H(P, i)) = -P.H[i].gradient(t);
        sys.add_eq(a, Rational(-lambda0) * P.f.gradient(t));
    }
    for (long i = 0; i < l; ++i) {
        if (vec_has(dir.act_g, i))
            sys.add_ineq(-unit(dim, idx_g(P, i)), 0);
        else
            sys.add_eq(unit(dim, idx_g(P, i)), 0);
    }
    for (long i : sets.plus_zero) sys.add_eq(unit(dim, idx_G(P, i)), 0);
    for (long i : dir.plus_zero) sys.add_eq(unit(dim, idx_G(P, i)), 0);
    for (long i : sets.zero_plus) sys.add_eq(unit(dim, idx_H(P, i)), 0);
    for (long i : dir.zero_plus) sys.add_eq(unit(dim, idx_H(P, i)), 0);
    return sys;
}

}  // namespace

std::vector<ConstraintRef> all_constraints(const MpecPoint& P) {
    std::vector<ConstraintRef> refs;
    for (long i = 0; i < P.num_g(); ++i) refs.push_back({ConstraintRef::Kind::Ineq, i});
    for (long i = 0; i < P.num_h(); ++i) refs.push_back({ConstraintRef::Kind::Eq, i});
    for (long i = 0; i < P.num_pairs(); ++i) refs.push_back({ConstraintRef::Kind::Pair, i});
    return refs;
}

std::vector<ConstraintRef> default_core_set(const MpecPoint& P) {
    std::vector<ConstraintRef> refs;
    for (long i = 0; i < P.num_g(); ++i)
        if (!P.g[i].affine) refs.push_back({ConstraintRef::Kind::Ineq, i});
    for (long i = 0; i < P.num_h(); ++i)
        if (!P.h[i].affine) refs.push_back({ConstraintRef::Kind::Eq, i});
    for (long i = 0; i < P.num_pairs(); ++i)
        if (!P.G[i].affine || !P.H[i].affine)
            refs.push_back({ConstraintRef::Kind::Pair, i});
    return refs;
}

long mult_dim(const MpecPoint& P) { return P.num_g() + P.num_h() + 2 * P.num_pairs(); }
long idx_g(const MpecPoint& P, long i) { (void)P; return i; }
long idx_h(const MpecPoint& P, long i) { return P.num_g() + i; }
long idx_G(const MpecPoint& P, long i) { return P.num_g() + P.num_h() + i; }
long idx_H(const MpecPoint& P, long i) { return P.num_g() + P.num_h() + P.num_pairs() + i; }

MultiplierSet build_multiplier_set(const MpecPoint& P, int lambda0, const RVector& u,
                                   MultVariant variant,
                                   const std::vector<ConstraintRef>& core_set) {
    if (lambda0 != 0 && lambda0 != 1) throw InputError("lambda0 must be 0 or 1");
    const IndexSets sets = classify_indices(P);
    const DirIndexSets dir = directional_index_sets(P, sets, u);

    MultiplierSet S;
    S.l = P.num_g();
    S.p = P.num_h();
    S.q = P.num_pairs();
    S.n = P.n;
    S.lambda0 = lambda0;
    S.variant = variant;
    S.direction = u;

    S.core = core_set;
    std::sort(S.core.begin(), S.core.end());
    S.core.erase(std::unique(S.core.begin(), S.core.end()), S.core.end());
    for (const ConstraintRef& r : S.core) {
        switch (r.kind) {
            case ConstraintRef::Kind::Ineq:
                if (r.index < 0 || r.index >= S.l) throw InputError("core set: bad inequality index");
                S.core_coords.push_back(idx_g(P, r.index));
                break;
            case ConstraintRef::Kind::Eq:
                if (r.index < 0 || r.index >= S.p) throw InputError("core set: bad equality index");
                S.core_coords.push_back(idx_h(P, r.index));
                break;
            case ConstraintRef::Kind::Pair:
                if (r.index < 0 || r.index >= S.q) throw InputError("core set: bad pair index");
                S.core_coords.push_back(idx_G(P, r.index));
                S.core_coords.push_back(idx_H(P, r.index));
                break;
        }
    }
    std::sort(S.core_coords.begin(), S.core_coords.end());

    const long dim = S.dim();
    const LinearSystem base = common_system(P, sets, dir, lambda0);

    std::set<long> base_pinned;
    for (long i = 0; i < S.l; ++i)
        if (!vec_has(dir.act_g, i)) base_pinned.insert(idx_g(P, i));
    for (long i : sets.plus_zero) base_pinned.insert(idx_G(P, i));
    for (long i : dir.plus_zero) base_pinned.insert(idx_G(P, i));
    for (long i : sets.zero_plus) base_pinned.insert(idx_H(P, i));
    for (long i : dir.zero_plus) base_pinned.insert(idx_H(P, i));

    std::set<long> base_nonneg;
    for (long i : dir.act_g) base_nonneg.insert(idx_g(P, i));

    const std::vector<long>& bi = dir.zero_zero;
    std::size_t count = 1;
    if (variant == MultVariant::Limiting)
        for (std::size_t k = 0; k < bi.size(); ++k) count *= 3;

    for (std::size_t code = 0; code < count; ++code) {
        MultiplierBranch br;
        br.sys = base;
        std::set<long> pinned = base_pinned;
        std::set<long> nonneg = base_nonneg;
        std::size_t rest = code;
        for (long i : bi) {
            PairSign s = PairSign::BothNonneg;
            if (variant == MultVariant::Limiting) {
                switch (rest % 3) {
                    case 0: s = PairSign::BothNonneg; break;
                    case 1: s = PairSign::GZero; break;
                    case 2: s = PairSign::HZero; break;
                }
                rest /= 3;
            }
            br.pattern.emplace_back(i, s);
            switch (s) {
                case PairSign::BothNonneg:
                    br.sys.add_ineq(-unit(dim, idx_G(P, i)), 0);
                    br.sys.add_ineq(-unit(dim, idx_H(P, i)), 0);
                    nonneg.insert(idx_G(P, i));
                    nonneg.insert(idx_H(P, i));
                    break;
                case PairSign::GZero:
                    br.sys.add_eq(unit(dim, idx_G(P, i)), 0);
                    pinned.insert(idx_G(P, i));
                    break;
                case PairSign::HZero:
                    br.sys.add_eq(unit(dim, idx_H(P, i)), 0);
                    pinned.insert(idx_H(P, i));
                    break;
            }
        }
        const std::size_t branch_index = S.branches.size();
        S.branches.push_back(br);

        if (lambda0 == 1) {
            S.query_branches.push_back({branch_index, S.branches.back().sys});
            continue;
        }

        // lambda0 = 0: orthant split of the free core coordinates, signed
        // sum normalized to 1.  Coordinates already known nonnegative only
        // get the + orthant.
        std::vector<long> free_core;
        for (long c : S.core_coords)
            if (!pinned.count(c)) free_core.push_back(c);
        if (free_core.empty()) continue;

        std::vector<int> sign(free_core.size(), 1);
        while (true) {
            LinearSystem qs = S.branches[branch_index].sys;
            RVector norm = RVector::Zero(dim);
            for (std::size_t k = 0; k < free_core.size(); ++k) {
                const long c = free_core[k];
                norm(c) = sign[k];
                if (sign[k] > 0)
                    qs.add_ineq(-unit(dim, c), 0);
                else
                    qs.add_ineq(unit(dim, c), 0);
            }
            qs.add_eq(norm, 1);
            S.query_branches.push_back({branch_index, qs});

            // odometer over {+1,-1}, skipping -1 for nonnegative coordinates
            bool advanced = false;
            std::size_t k = free_core.size();
            while (k > 0) {
                --k;
                if (sign[k] == 1 && !nonneg.count(free_core[k])) {
                    sign[k] = -1;
                    advanced = true;
                    break;
                }
                sign[k] = 1;
            }
            if (!advanced) break;
        }
    }
    return S;
}

MultiplierSet build_multiplier_set(const MpecPoint& P, int lambda0, const RVector& u,
                                   MultVariant variant) {
    return build_multiplier_set(P, lambda0, u, variant, default_core_set(P));
}

bool set_empty(const MultiplierSet& set) {
    for (const auto& qb : set.query_branches)
        if (lp_feasible(qb.sys).status == LpStatus::Optimal) return false;
    return true;
}

namespace {

// Refines Nonempty to Singleton by pinning every coordinate of every
// feasible branch to the witness value.
SetStatus singleton_status(const MultiplierSet& set,
                           const std::vector<const LinearSystem*>& feasible,
                           const RVector& witness) {
    const long dim = set.dim();
    for (const LinearSystem* sys : feasible) {
        for (long k = 0; k < dim; ++k) {
            RVector e = unit(dim, k);
            LpOutcome mn = lp_solve(e, Sense::Minimize, *sys);
            if (mn.status != LpStatus::Optimal || *mn.value != witness(k))
                return SetStatus::Nonempty;
            LpOutcome mx = lp_solve(e, Sense::Maximize, *sys);
            if (mx.status != LpStatus::Optimal || *mx.value != witness(k))
                return SetStatus::Nonempty;
        }
    }
    return SetStatus::Singleton;
}

}  // namespace

SetQueryResult query(const MultiplierSet& set) {
    SetQueryResult r;
    std::vector<const LinearSystem*> feasible;
    for (const auto& qb : set.query_branches) {
        LpOutcome out = lp_feasible(qb.sys);
        if (out.status == LpStatus::Optimal) {
            if (!r.witness) r.witness = out.point;
            feasible.push_back(&qb.sys);
        }
    }
    if (!r.witness) {
        r.status = SetStatus::Empty;
        return r;
    }
    r.status = singleton_status(set, feasible, *r.witness);
    return r;
}

SetQueryResult query(const MultiplierSet& set, const RVector& objective, Sense sense) {
    if (objective.size() != set.dim()) throw InputError("objective dimension mismatch");
    SetQueryResult r;
    std::vector<const LinearSystem*> feasible;
    for (const auto& qb : set.query_branches) {
        LpOutcome out = lp_solve(objective, sense, qb.sys);
        BranchExtremum ext;
        ext.status = out.status;
        if (out.status == LpStatus::Optimal) {
            ext.value = out.value;
            feasible.push_back(&qb.sys);
            if (!r.witness) r.witness = out.point;
            const bool better =
                !r.best || (sense == Sense::Maximize ? *out.value > *r.best
                                                    : *out.value < *r.best);
            if (better) {
                r.best = out.value;
                r.best_witness = out.point;
            }
        } else if (out.status == LpStatus::Unbounded) {
            r.any_unbounded = true;
            feasible.push_back(&qb.sys);
            if (!r.witness) {
                LpOutcome probe = lp_feasible(qb.sys);
                r.witness = probe.point;
            }
        }
        r.per_branch.push_back(ext);
    }
    if (!r.witness) {
        r.status = SetStatus::Empty;
        return r;
    }
    // An unbounded branch cannot be a single point.
    r.status = r.any_unbounded ? SetStatus::Nonempty
                               : singleton_status(set, feasible, *r.witness);
    return r;
}

std::optional<RVector> point_with_value_at_least(const MultiplierSet& set,
                                                 const RVector& objective,
                                                 const Rational& bound) {
    if (objective.size() != set.dim()) throw InputError("objective dimension mismatch");
    if (set.lambda0 == 1) {
        for (const auto& qb : set.query_branches) {
            LinearSystem sys = qb.sys;
            sys.add_ineq(-objective, -bound);
            LpOutcome out = lp_feasible(sys);
            if (out.status == LpStatus::Optimal) return out.point;
        }
        return std::nullopt;
    }
    // The members are the positive scalings of the normalized slices, so a
    // branch reaches the bound iff its slice maximum scales up to it.
    for (const auto& qb : set.query_branches) {
        LpOutcome out = lp_solve(objective, Sense::Maximize, qb.sys);
        if (out.status == LpStatus::Unbounded) {
            LpOutcome start = lp_feasible(qb.sys);
            RVector x = *start.point;
            const Rational have = objective.dot(x);
            if (have < bound) x = x + ((bound - have) / objective.dot(*out.ray)) * *out.ray;
            return x;
        }
        if (out.status != LpStatus::Optimal) continue;
        const Rational v = *out.value;
        if (v >= bound) return out.point;
        if (v > 0 || bound < 0) return RVector((bound / v) * *out.point);
        // v <= 0 < bound or v < bound = 0: no scaling reaches the bound
    }
    return std::nullopt;
}

bool membership(const MultiplierSet& set, const RVector& lambda) {
    if (lambda.size() != set.dim()) throw InputError("multiplier dimension mismatch");
    bool in_branch = false;
    for (const auto& br : set.branches)
        if (br.sys.contains(lambda)) { in_branch = true; break; }
    if (!in_branch) return false;
    if (set.lambda0 == 0) {
        bool core_nonzero = false;
        for (long c : set.core_coords)
            if (lambda(c) != 0) { core_nonzero = true; break; }
        return core_nonzero;
    }
    return true;
}

bool coordinate_always_zero(const MultiplierSet& set, long coord) {
    if (coord < 0 || coord >= set.dim()) throw InputError("coordinate out of range");
    // For lambda0 = 0 the query branches are normalized slices; zero there
    // extends to the whole cone branch by positive scaling.
    const RVector e = unit(set.dim(), coord);
    for (const auto& qb : set.query_branches) {
        LpOutcome mx = lp_solve(e, Sense::Maximize, qb.sys);
        if (mx.status == LpStatus::Infeasible) continue;
        if (mx.status != LpStatus::Optimal || *mx.value != 0) return false;
        LpOutcome mn = lp_solve(e, Sense::Minimize, qb.sys);
        if (mn.status != LpStatus::Optimal || *mn.value != 0) return false;
    }
    return true;
}

bool gmfcq_holds(const MpecPoint& P) {
    MultiplierSet abnormal = build_multiplier_set(
        P, 0, RVector::Zero(P.n), MultVariant::Limiting, all_constraints(P));
    return set_empty(abnormal);
}

}  // namespace statcert
