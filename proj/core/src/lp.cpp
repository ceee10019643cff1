#include "statcert/lp.hpp"

#include "statcert/errors.hpp"

#include <algorithm>

namespace statcert {

void LinearSystem::add_eq(const RVector& a, const Rational& b) {
    if (a.size() != dim) throw InputError("equality row dimension mismatch");
    eq.push_back({a, b});
}

void LinearSystem::add_ineq(const RVector& a, const Rational& b) {
    if (a.size() != dim) throw InputError("inequality row dimension mismatch");
    ineq.push_back({a, b});
}

bool LinearSystem::contains(const RVector& x) const {
    for (const auto& r : eq)
        if (r.a.dot(x) != r.b) return false;
    for (const auto& r : ineq)
        if (r.a.dot(x) > r.b) return false;
    return true;
}

bool LinearSystem::homogeneous() const {
    for (const auto& r : eq)
        if (r.b != 0) return false;
    for (const auto& r : ineq)
        if (r.b != 0) return false;
    return true;
}

namespace {

// Dense two-phase primal simplex with Bland's rule on the standard form
//   min c.z  s.t.  E z = b', z >= 0
// built from x = x+ - x-, one slack per inequality, one artificial per row.
class Simplex {
  public:
    Simplex(const RVector& cost, const LinearSystem& sys) : sys_(sys), n_(sys.dim) {
        me_ = static_cast<Eigen::Index>(sys.eq.size());
        mi_ = static_cast<Eigen::Index>(sys.ineq.size());
        m_ = me_ + mi_;
        slack0_ = 2 * n_;
        art0_ = slack0_ + mi_;
        ncols_ = art0_ + m_;
        tab_ = RMatrix::Zero(m_, ncols_ + 1);
        flip_.assign(static_cast<std::size_t>(m_), false);
        for (Eigen::Index i = 0; i < m_; ++i) {
            const LinRow& row = i < me_ ? sys.eq[static_cast<std::size_t>(i)]
                                        : sys.ineq[static_cast<std::size_t>(i - me_)];
            const bool flip = row.b < 0;
            flip_[static_cast<std::size_t>(i)] = flip;
            const Rational s = flip ? Rational(-1) : Rational(1);
            for (Eigen::Index j = 0; j < n_; ++j) {
                tab_(i, j) = s * row.a(j);
                tab_(i, n_ + j) = -s * row.a(j);
            }
            if (i >= me_) tab_(i, slack0_ + (i - me_)) = s;
            tab_(i, art0_ + i) = 1;
            tab_(i, ncols_) = s * row.b;
        }
        basis_.resize(static_cast<std::size_t>(m_));
        for (Eigen::Index i = 0; i < m_; ++i)
            basis_[static_cast<std::size_t>(i)] = art0_ + i;
        cost_ = RVector::Zero(ncols_);
        for (Eigen::Index j = 0; j < n_; ++j) {
            cost_(j) = cost(j);
            cost_(n_ + j) = -cost(j);
        }
    }

    // Returns the outcome except for sense/value fix-ups handled by lp_solve.
    LpOutcome run() {
        LpOutcome out;
        RVector phase1 = RVector::Zero(ncols_);
        for (Eigen::Index i = 0; i < m_; ++i) phase1(art0_ + i) = 1;
        iterate(phase1, true);
        if (objective_of(phase1) > 0) {
            out.status = LpStatus::Infeasible;
            const RVector y = duals(phase1);
            out.dual_eq = RVector(me_);
            out.dual_ineq = RVector(mi_);
            for (Eigen::Index i = 0; i < me_; ++i) (*out.dual_eq)(i) = -unflipped(y, i);
            for (Eigen::Index i = 0; i < mi_; ++i) (*out.dual_ineq)(i) = -unflipped(y, me_ + i);
            return out;
        }
        drive_out_artificials();
        const auto ray_col = iterate(cost_, false);
        if (ray_col) {
            out.status = LpStatus::Unbounded;
            out.ray = extract_ray(*ray_col);
            return out;
        }
        out.status = LpStatus::Optimal;
        out.point = extract_point();
        out.value = objective_of(cost_);
        const RVector y = duals(cost_);
        out.dual_eq = RVector(me_);
        out.dual_ineq = RVector(mi_);
        for (Eigen::Index i = 0; i < me_; ++i) (*out.dual_eq)(i) = -unflipped(y, i);
        for (Eigen::Index i = 0; i < mi_; ++i) (*out.dual_ineq)(i) = -unflipped(y, me_ + i);
        return out;
    }

  private:
    Rational reduced_cost(const RVector& c, Eigen::Index col) const {
        Rational rc = c(col);
        for (Eigen::Index r = 0; r < m_; ++r)
            rc -= c(basis_[static_cast<std::size_t>(r)]) * tab_(r, col);
        return rc;
    }

    Rational objective_of(const RVector& c) const {
        Rational v = 0;
        for (Eigen::Index r = 0; r < m_; ++r)
            v += c(basis_[static_cast<std::size_t>(r)]) * tab_(r, ncols_);
        return v;
    }

    // y_i = c_B B^{-1} e_i, read through the artificial columns.
    RVector duals(const RVector& c) const {
        RVector y(m_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            Rational v = 0;
            for (Eigen::Index r = 0; r < m_; ++r)
                v += c(basis_[static_cast<std::size_t>(r)]) * tab_(r, art0_ + i);
            y(i) = v;
        }
        return y;
    }

    Rational unflipped(const RVector& y, Eigen::Index i) const {
        return flip_[static_cast<std::size_t>(i)] ? Rational(-y(i)) : y(i);
    }

    void pivot(Eigen::Index row, Eigen::Index col) {
        const Rational p = tab_(row, col);
        for (Eigen::Index c = 0; c <= ncols_; ++c) tab_(row, c) /= p;
        for (Eigen::Index r = 0; r < m_; ++r) {
            if (r == row || tab_(r, col) == 0) continue;
            const Rational f = tab_(r, col);
            for (Eigen::Index c = 0; c <= ncols_; ++c) tab_(r, c) -= f * tab_(row, c);
        }
        basis_[static_cast<std::size_t>(row)] = col;
    }

    // Bland's rule; returns the entering column when unbounded, nullopt at optimality.
    std::optional<Eigen::Index> iterate(const RVector& c, bool allow_artificial) {
        for (;;) {
            Eigen::Index enter = -1;
            const Eigen::Index limit = allow_artificial ? ncols_ : art0_;
            for (Eigen::Index j = 0; j < limit; ++j) {
                if (reduced_cost(c, j) < 0) { enter = j; break; }
            }
            if (enter < 0) return std::nullopt;
            Eigen::Index leave = -1;
            Rational best;
            for (Eigen::Index r = 0; r < m_; ++r) {
                if (tab_(r, enter) <= 0) continue;
                const Rational ratio = tab_(r, ncols_) / tab_(r, enter);
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[static_cast<std::size_t>(r)] <
                                          basis_[static_cast<std::size_t>(leave)])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return enter;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        for (Eigen::Index r = 0; r < m_; ++r) {
            if (basis_[static_cast<std::size_t>(r)] < art0_) continue;
            Eigen::Index col = -1;
            for (Eigen::Index j = 0; j < art0_; ++j) {
                if (tab_(r, j) != 0) { col = j; break; }
            }
            // All-zero row: redundant constraint, the artificial stays basic at 0.
            if (col >= 0) pivot(r, col);
        }
    }

    RVector extract_point() const {
        RVector x = zero_vector(n_);
        for (Eigen::Index r = 0; r < m_; ++r) {
            const Eigen::Index bv = basis_[static_cast<std::size_t>(r)];
            if (bv < n_)
                x(bv) += tab_(r, ncols_);
            else if (bv < 2 * n_)
                x(bv - n_) -= tab_(r, ncols_);
        }
        return x;
    }

    RVector extract_ray(Eigen::Index enter) const {
        RVector z = RVector::Zero(ncols_);
        z(enter) = 1;
        for (Eigen::Index r = 0; r < m_; ++r)
            z(basis_[static_cast<std::size_t>(r)]) = -tab_(r, enter);
        RVector d = zero_vector(n_);
        for (Eigen::Index j = 0; j < n_; ++j) d(j) = z(j) - z(n_ + j);
        return d;
    }

    const LinearSystem& sys_;
    Eigen::Index n_, me_, mi_, m_, slack0_, art0_, ncols_;
    RMatrix tab_;
    RVector cost_;
    std::vector<Eigen::Index> basis_;
    std::vector<bool> flip_;
};

void verify_outcome(const RVector& c, Sense sense, const LinearSystem& sys,
                    const LpOutcome& out) {
    const Rational s = sense == Sense::Minimize ? 1 : -1;
    switch (out.status) {
        case LpStatus::Optimal: {
            if (!out.point || !out.value || !out.dual_eq || !out.dual_ineq)
                throw CertificateError("optimal outcome missing fields");
            const RVector& x = *out.point;
            if (!sys.contains(x)) throw CertificateError("optimal point infeasible");
            if (c.dot(x) != *out.value) throw CertificateError("objective mismatch");
            RVector station = s * c;
            Rational dual_value = 0;
            for (std::size_t i = 0; i < sys.eq.size(); ++i) {
                station += (*out.dual_eq)(static_cast<Eigen::Index>(i)) * sys.eq[i].a;
                dual_value += (*out.dual_eq)(static_cast<Eigen::Index>(i)) * sys.eq[i].b;
            }
            for (std::size_t k = 0; k < sys.ineq.size(); ++k) {
                const Rational mu = (*out.dual_ineq)(static_cast<Eigen::Index>(k));
                if (mu < 0) throw CertificateError("negative inequality dual");
                if (mu != 0 && sys.ineq[k].a.dot(x) != sys.ineq[k].b)
                    throw CertificateError("complementary slackness violated");
                station += mu * sys.ineq[k].a;
                dual_value += mu * sys.ineq[k].b;
            }
            if (!is_zero(station)) throw CertificateError("dual stationarity violated");
            if (s * *out.value != -dual_value) throw CertificateError("duality gap");
            break;
        }
        case LpStatus::Infeasible: {
            if (!out.dual_eq || !out.dual_ineq)
                throw CertificateError("infeasible outcome missing certificate");
            RVector comb = zero_vector(sys.dim);
            Rational rhs = 0;
            for (std::size_t i = 0; i < sys.eq.size(); ++i) {
                comb += (*out.dual_eq)(static_cast<Eigen::Index>(i)) * sys.eq[i].a;
                rhs += (*out.dual_eq)(static_cast<Eigen::Index>(i)) * sys.eq[i].b;
            }
            for (std::size_t k = 0; k < sys.ineq.size(); ++k) {
                const Rational mu = (*out.dual_ineq)(static_cast<Eigen::Index>(k));
                if (mu < 0) throw CertificateError("negative Farkas multiplier");
                comb += mu * sys.ineq[k].a;
                rhs += mu * sys.ineq[k].b;
            }
            if (!is_zero(comb) || rhs >= 0) throw CertificateError("Farkas identity violated");
            break;
        }
        case LpStatus::Unbounded: {
            if (!out.ray) throw CertificateError("unbounded outcome missing ray");
            const RVector& r = *out.ray;
            for (const auto& row : sys.eq)
                if (row.a.dot(r) != 0) throw CertificateError("ray violates equality");
            for (const auto& row : sys.ineq)
                if (row.a.dot(r) > 0) throw CertificateError("ray violates inequality");
            if (s * c.dot(r) >= 0) throw CertificateError("ray does not improve objective");
            break;
        }
    }
}

}  // namespace

LpOutcome lp_solve(const RVector& objective, Sense sense, const LinearSystem& sys) {
    if (objective.size() != sys.dim) throw InputError("objective dimension mismatch");
    if (sys.dim == 0) {
        // No variables: the system is a set of numeric claims.
        LpOutcome out;
        bool ok = true;
        for (const auto& r : sys.eq) ok = ok && r.b == 0;
        for (const auto& r : sys.ineq) ok = ok && r.b >= 0;
        out.dual_eq = zero_vector(static_cast<Eigen::Index>(sys.eq.size()));
        out.dual_ineq = zero_vector(static_cast<Eigen::Index>(sys.ineq.size()));
        if (ok) {
            out.status = LpStatus::Optimal;
            out.value = 0;
            out.point = zero_vector(0);
        } else {
            out.status = LpStatus::Infeasible;
            bool done = false;
            for (std::size_t i = 0; i < sys.eq.size() && !done; ++i) {
                if (sys.eq[i].b != 0) {
                    (*out.dual_eq)(static_cast<Eigen::Index>(i)) =
                        sys.eq[i].b > 0 ? Rational(-1) : Rational(1);
                    done = true;
                }
            }
            for (std::size_t k = 0; k < sys.ineq.size() && !done; ++k) {
                if (sys.ineq[k].b < 0) {
                    (*out.dual_ineq)(static_cast<Eigen::Index>(k)) = 1;
                    done = true;
                }
            }
        }
        verify_outcome(objective, sense, sys, out);
        return out;
    }
    const RVector cost = sense == Sense::Minimize ? objective : RVector(-objective);
    Simplex simplex(cost, sys);
    LpOutcome out = simplex.run();
    if (out.status == LpStatus::Optimal && sense == Sense::Maximize)
        out.value = -*out.value;
    verify_outcome(objective, sense, sys, out);
    return out;
}

LpOutcome lp_feasible(const LinearSystem& sys) {
    return lp_solve(zero_vector(sys.dim), Sense::Minimize, sys);
}

}  // namespace statcert
