#include "statcert/pivot.hpp"

#include <algorithm>
#include <random>

#include "statcert/errors.hpp"
#include "statcert/linalg.hpp"

namespace statcert {

namespace {

bool vec_has(const std::vector<long>& v, long i) {
    return std::binary_search(v.begin(), v.end(), i);
}

std::vector<long> sorted_unique(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Gradient rows of a working set, in the fixed order g, h, G, H.
std::vector<RVector> family_rows(const MpecPoint& P, const std::vector<long>& jg,
                                 const std::vector<long>& jG, const std::vector<long>& jH) {
    std::vector<RVector> rows;
    for (long i : jg) rows.push_back(P.g[i].gradient);
    for (long i = 0; i < P.num_h(); ++i) rows.push_back(P.h[i].gradient);
    for (long i : jG) rows.push_back(P.G[i].gradient);
    for (long i : jH) rows.push_back(P.H[i].gradient);
    return rows;
}

}  // namespace

long rank_r(const MpecPoint& P) {
    const IndexSets sets = classify_indices(P);
    std::vector<RVector> rows;
    for (long i : sets.act_g) rows.push_back(P.g[i].gradient);
    for (long i = 0; i < P.num_h(); ++i) rows.push_back(P.h[i].gradient);
    for (long i : sets.zero_plus) rows.push_back(P.G[i].gradient);
    for (long i : sets.zero_zero) rows.push_back(P.G[i].gradient);
    for (long i : sets.plus_zero) rows.push_back(P.H[i].gradient);
    for (long i : sets.zero_zero) rows.push_back(P.H[i].gradient);
    return rank_and_nullspace(rows, P.n).rank;
}

WorkingSet WorkingSet::construct(const MpecPoint& P, std::vector<long> J_g,
                                 std::vector<long> J_G, std::vector<long> J_H) {
    const IndexSets sets = classify_indices(P);
    WorkingSet ws;
    ws.J_g = sorted_unique(std::move(J_g));
    ws.J_G = sorted_unique(std::move(J_G));
    ws.J_H = sorted_unique(std::move(J_H));

    for (long i : ws.J_g)
        if (!vec_has(sets.act_g, i)) throw InputError("J_g must contain active inequality indices");
    for (long i : ws.J_G)
        if (!vec_has(sets.zero_plus, i) && !vec_has(sets.zero_zero, i))
            throw InputError("J_G index outside its admissible domain");
    for (long i : ws.J_H)
        if (!vec_has(sets.plus_zero, i) && !vec_has(sets.zero_zero, i))
            throw InputError("J_H index outside its admissible domain");
    for (long i = 0; i < P.num_pairs(); ++i)
        if (!vec_has(ws.J_G, i) && !vec_has(ws.J_H, i))
            throw InputError("every pair must lie in J_G or J_H");

    const long count = static_cast<long>(ws.J_g.size()) + P.num_h() +
                       static_cast<long>(ws.J_G.size()) + static_cast<long>(ws.J_H.size());
    if (count != rank_r(P)) throw InputError("working set cardinality must equal the active rank");
    if (!rows_independent(family_rows(P, ws.J_g, ws.J_G, ws.J_H)))
        throw InputError("working set gradients are dependent");
    return ws;
}

namespace {

bool dfs_pairs(const MpecPoint& P, const IndexSets& sets, std::size_t k,
               std::vector<RVector>& family, std::vector<long>& jG, std::vector<long>& jH,
               long r, WorkingSet& out) {
    if (k == sets.zero_zero.size()) {
        std::vector<long> jg;
        for (long i : sets.act_g) {
            family.push_back(P.g[i].gradient);
            if (rows_independent(family)) {
                jg.push_back(i);
            } else {
                family.pop_back();
            }
        }
        const long total = static_cast<long>(jg.size()) + P.num_h() +
                           static_cast<long>(jG.size()) + static_cast<long>(jH.size());
        bool ok = total == r;
        if (ok) out = WorkingSet::construct(P, jg, jG, jH);
        for (std::size_t t = 0; t < jg.size(); ++t) family.pop_back();
        return ok;
    }
    const long i = sets.zero_zero[k];
    // options: both rows, G row only, H row only
    for (int opt = 0; opt < 3; ++opt) {
        std::size_t added = 0;
        bool fits = true;
        if (opt == 0 || opt == 1) {
            family.push_back(P.G[i].gradient);
            ++added;
            fits = rows_independent(family);
        }
        if (fits && (opt == 0 || opt == 2)) {
            family.push_back(P.H[i].gradient);
            ++added;
            fits = rows_independent(family);
        }
        if (fits) {
            if (opt == 0 || opt == 1) jG.push_back(i);
            if (opt == 0 || opt == 2) jH.push_back(i);
            if (dfs_pairs(P, sets, k + 1, family, jG, jH, r, out)) return true;
            if (opt == 0 || opt == 1) jG.pop_back();
            if (opt == 0 || opt == 2) jH.pop_back();
        }
        for (std::size_t t = 0; t < added; ++t) family.pop_back();
    }
    return false;
}

}  // namespace

std::optional<WorkingSet> find_initial_working_set(const MpecPoint& P) {
    const IndexSets sets = classify_indices(P);
    std::vector<RVector> family;
    for (long i = 0; i < P.num_h(); ++i) family.push_back(P.h[i].gradient);
    if (!rows_independent(family)) return std::nullopt;
    std::vector<long> jG, jH;
    for (long i : sets.zero_plus) {
        family.push_back(P.G[i].gradient);
        if (!rows_independent(family)) return std::nullopt;
        jG.push_back(i);
    }
    for (long i : sets.plus_zero) {
        family.push_back(P.H[i].gradient);
        if (!rows_independent(family)) return std::nullopt;
        jH.push_back(i);
    }
    WorkingSet out;
    if (!dfs_pairs(P, sets, 0, family, jG, jH, rank_r(P), out)) return std::nullopt;
    return out;
}

RVector lambda_of(const MpecPoint& P, const WorkingSet& J) {
    const long cols = static_cast<long>(J.J_g.size()) + P.num_h() +
                      static_cast<long>(J.J_G.size()) + static_cast<long>(J.J_H.size());
    RMatrix A = RMatrix::Zero(P.n, cols);
    long c = 0;
    for (long i : J.J_g) A.col(c++) = P.g[i].gradient;
    for (long i = 0; i < P.num_h(); ++i) A.col(c++) = P.h[i].gradient;
    for (long i : J.J_G) A.col(c++) = -P.G[i].gradient;
    for (long i : J.J_H) A.col(c++) = -P.H[i].gradient;

    std::optional<RVector> y = solve_particular(A, RVector(-P.f.gradient));
    if (!y) throw NotRepresentableError("objective gradient is outside the active-gradient span");

    RVector lam = RVector::Zero(mult_dim(P));
    c = 0;
    for (long i : J.J_g) lam(idx_g(P, i)) = (*y)(c++);
    for (long i = 0; i < P.num_h(); ++i) lam(idx_h(P, i)) = (*y)(c++);
    for (long i : J.J_G) lam(idx_G(P, i)) = (*y)(c++);
    for (long i : J.J_H) lam(idx_H(P, i)) = (*y)(c++);
    return lam;
}

bool verify_strong_m(const MpecPoint& P, const WorkingSet& J, const RVector& lambda) {
    if (lambda.size() != mult_dim(P)) return false;
    WorkingSet ws;
    try {
        ws = WorkingSet::construct(P, J.J_g, J.J_G, J.J_H);
    } catch (const InputError&) {
        return false;
    }
    for (long i = 0; i < P.num_g(); ++i) {
        const Rational v = lambda(idx_g(P, i));
        if (vec_has(ws.J_g, i) ? v < 0 : v != 0) return false;
    }
    for (long i = 0; i < P.num_pairs(); ++i) {
        if (!vec_has(ws.J_G, i) && lambda(idx_G(P, i)) != 0) return false;
        if (!vec_has(ws.J_H, i) && lambda(idx_H(P, i)) != 0) return false;
        if (vec_has(ws.J_G, i) && vec_has(ws.J_H, i) &&
            (lambda(idx_G(P, i)) < 0 || lambda(idx_H(P, i)) < 0))
            return false;
    }
    return membership(build_multiplier_set(P, 1, RVector::Zero(P.n), MultVariant::Limiting),
                      lambda);
}

namespace {

std::vector<long> difference(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out;
    for (long i : a)
        if (!vec_has(b, i)) out.push_back(i);
    return out;
}

void validate_b(const MpecPoint& P, const IndexSets& sets, const WorkingSet& J0,
                const Perturbation& b) {
    if (b.bg.size() != P.num_g() || b.bG.size() != P.num_pairs() || b.bH.size() != P.num_pairs())
        throw InputError("perturbation dimensions do not match the problem");
    for (long i = 0; i < P.num_g(); ++i) {
        const bool free_comp = vec_has(sets.act_g, i) && !vec_has(J0.J_g, i);
        if (free_comp ? b.bg(i) <= 0 : b.bg(i) != 0)
            throw InputError("inequality perturbation must be positive exactly off the working set");
    }
    for (long i = 0; i < P.num_pairs(); ++i) {
        const bool free_G = vec_has(sets.zero_zero, i) && !vec_has(J0.J_G, i);
        const bool free_H = vec_has(sets.zero_zero, i) && !vec_has(J0.J_H, i);
        if (free_G ? b.bG(i) >= 0 : b.bG(i) != 0)
            throw InputError("pair perturbation must be negative exactly off the working set");
        if (free_H ? b.bH(i) >= 0 : b.bH(i) != 0)
            throw InputError("pair perturbation must be negative exactly off the working set");
    }
}

long next_prime(long from) {
    long n = from + 1;
    for (;; ++n) {
        if (n < 2) continue;
        bool prime = true;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) { prime = false; break; }
        if (prime) return n;
    }
}

Perturbation draw_b(const MpecPoint& P, const IndexSets& sets, const WorkingSet& J0,
                    std::mt19937_64& rng, long& prime_cursor) {
    Perturbation b;
    b.bg = RVector::Zero(P.num_g());
    b.bG = RVector::Zero(P.num_pairs());
    b.bH = RVector::Zero(P.num_pairs());
    auto value = [&]() {
        const long num = 1 + static_cast<long>(rng() % 97);
        prime_cursor = next_prime(prime_cursor);
        return Rational(num) / prime_cursor;
    };
    for (long i : difference(sets.act_g, J0.J_g)) b.bg(i) = value();
    for (long i : difference(sets.zero_zero, J0.J_G)) b.bG(i) = -value();
    for (long i : difference(sets.zero_zero, J0.J_H)) b.bH(i) = -value();
    return b;
}

// Invariant of every cycle: the working-set rows are tight at their
// perturbed bounds and all other rows are strictly slack.
void check_cycle_state(const MpecPoint& P, const IndexSets& sets, const WorkingSet& J,
                       const Perturbation& b, const RVector& u) {
    for (long i : sets.act_g) {
        const Rational v = P.g[i].gradient.dot(u);
        if (vec_has(J.J_g, i)) {
            if (v != b.bg(i)) throw CertificateError("working-set inequality row not tight");
        } else if (v >= b.bg(i)) {
            throw DegenerateInputError("non-working-set inequality row is tight");
        }
    }
    for (long i = 0; i < P.num_h(); ++i)
        if (P.h[i].gradient.dot(u) != 0) throw CertificateError("equality row left the subspace");
    for (long i : sets.zero_plus)
        if (P.G[i].gradient.dot(u) != 0) throw CertificateError("pinned G row left the subspace");
    for (long i : sets.plus_zero)
        if (P.H[i].gradient.dot(u) != 0) throw CertificateError("pinned H row left the subspace");
    for (long i : sets.zero_zero) {
        const Rational vG = P.G[i].gradient.dot(u);
        const Rational vH = P.H[i].gradient.dot(u);
        if (vec_has(J.J_G, i)) {
            if (vG != b.bG(i)) throw CertificateError("working-set G row not tight");
        } else if (vG <= b.bG(i)) {
            throw DegenerateInputError("non-working-set G row is tight");
        }
        if (vec_has(J.J_H, i)) {
            if (vH != b.bH(i)) throw CertificateError("working-set H row not tight");
        } else if (vH <= b.bH(i)) {
            throw DegenerateInputError("non-working-set H row is tight");
        }
    }
}

PivotOutcome run_pivot(const MpecPoint& P, const IndexSets& sets, const WorkingSet& J0,
                       const Perturbation& b) {
    PivotOutcome out;
    out.b = b;
    WorkingSet J = J0;
    RVector u = RVector::Zero(P.n);
    RVector lam = lambda_of(P, J);

    unsigned long long bound = 1;
    for (std::size_t k = 0; k < sets.act_g.size() && bound < (1ULL << 40); ++k) bound *= 2;
    for (std::size_t k = 0; k < sets.zero_zero.size() && bound < (1ULL << 40); ++k) bound *= 3;

    for (unsigned long long iter = 0;; ++iter) {
        if (iter > bound) throw CertificateError("pivot exceeded the working-set bound");
        check_cycle_state(P, sets, J, b, u);

        // drop rule: inequality block first, then pairs carrying both rows
        int drop_block = -1;
        long drop_index = -1;
        for (long i : J.J_g) {
            if (lam(idx_g(P, i)) < 0) {
                drop_block = 0;
                drop_index = i;
                break;
            }
        }
        if (drop_block < 0) {
            for (long i : J.J_G) {
                if (!vec_has(J.J_H, i)) continue;
                if (lam(idx_G(P, i)) < 0) {
                    drop_block = 1;
                    drop_index = i;
                    break;
                }
                if (lam(idx_H(P, i)) < 0) {
                    drop_block = 2;
                    drop_index = i;
                    break;
                }
            }
        }
        if (drop_block < 0) {
            out.kind = PivotOutcome::Kind::StronglyM;
            out.J = J;
            out.lambda = lam;
            return out;
        }

        PivotCycle cyc;
        cyc.J = J;
        cyc.lambda = lam;
        cyc.drop_block = drop_block;
        cyc.drop_index = drop_index;

        std::vector<long> jg = J.J_g, jG = J.J_G, jH = J.J_H;
        auto erase_from = [](std::vector<long>& v, long i) {
            v.erase(std::find(v.begin(), v.end(), i));
        };
        if (drop_block == 0) erase_from(jg, drop_index);
        if (drop_block == 1) erase_from(jG, drop_index);
        if (drop_block == 2) erase_from(jH, drop_index);

        // search direction: reduced working-set rows to zero, descent rate one
        std::vector<RVector> rows = family_rows(P, jg, jG, jH);
        rows.push_back(P.f.gradient);
        RVector rhs = RVector::Zero(static_cast<long>(rows.size()));
        rhs(static_cast<long>(rows.size()) - 1) = -1;
        std::optional<RVector> d = solve_particular(stack_rows(rows, P.n), rhs);
        if (!d) throw CertificateError("search direction system inconsistent");
        cyc.d = *d;

        // ratio test over the rows that can become tight
        std::optional<Rational> best;
        int enter_block = -1;
        long enter_index = -1;
        int attainers = 0;
        auto consider = [&](int block, long index, const Rational& num, const Rational& den) {
            const Rational alpha = num / den;
            if (!best || alpha < *best) {
                best = alpha;
                enter_block = block;
                enter_index = index;
                attainers = 1;
            } else if (alpha == *best) {
                ++attainers;
            }
        };
        for (long i : difference(sets.act_g, jg)) {
            const Rational slope = P.g[i].gradient.dot(*d);
            if (slope > 0) consider(0, i, b.bg(i) - P.g[i].gradient.dot(u), slope);
        }
        for (long i : difference(sets.zero_zero, jG)) {
            const Rational slope = P.G[i].gradient.dot(*d);
            if (slope < 0) consider(1, i, b.bG(i) - P.G[i].gradient.dot(u), slope);
        }
        for (long i : difference(sets.zero_zero, jH)) {
            const Rational slope = P.H[i].gradient.dot(*d);
            if (slope < 0) consider(2, i, b.bH(i) - P.H[i].gradient.dot(u), slope);
        }

        if (!best) {
            cyc.u_after = u;
            out.trace.push_back(cyc);
            out.kind = PivotOutcome::Kind::DescentDirection;
            out.J = J;
            out.lambda = lam;
            out.descent = *d;
            return out;
        }
        if (attainers > 1) throw DegenerateInputError("ratio test tie");
        if (*best == 0) throw DegenerateInputError("zero pivot step");

        if (enter_block == 0) jg.push_back(enter_index);
        if (enter_block == 1) jG.push_back(enter_index);
        if (enter_block == 2) jH.push_back(enter_index);
        const Rational old_obj = P.f.gradient.dot(u);
        u = u + *best * *d;
        if (P.f.gradient.dot(u) != old_obj - *best)
            throw CertificateError("objective value did not decrease by the step length");

        J = WorkingSet::construct(P, jg, jG, jH);
        lam = lambda_of(P, J);
        cyc.enter_block = enter_block;
        cyc.enter_index = enter_index;
        cyc.step = best;
        cyc.u_after = u;
        out.trace.push_back(cyc);
    }
}

}  // namespace

PivotOutcome pivot(const MpecPoint& P, const WorkingSet& J0, unsigned long long seed) {
    const IndexSets sets = classify_indices(P);
    const WorkingSet J = WorkingSet::construct(P, J0.J_g, J0.J_G, J0.J_H);
    std::mt19937_64 rng(seed);
    long prime_cursor = 10000;
    for (int attempt = 0; attempt <= 32; ++attempt) {
        const Perturbation b = draw_b(P, sets, J, rng, prime_cursor);
        try {
            PivotOutcome out = run_pivot(P, sets, J, b);
            out.redraws = attempt;
            return out;
        } catch (const DegenerateInputError&) {
            if (attempt == 32) throw;
        }
    }
    throw DegenerateInputError("pivot stayed degenerate after 32 redraws");
}

PivotOutcome pivot_with_b(const MpecPoint& P, const WorkingSet& J0, const Perturbation& b) {
    const IndexSets sets = classify_indices(P);
    const WorkingSet J = WorkingSet::construct(P, J0.J_g, J0.J_G, J0.J_H);
    validate_b(P, sets, J, b);
    return run_pivot(P, sets, J, b);
}

}  // namespace statcert
