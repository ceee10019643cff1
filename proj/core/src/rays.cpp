#include "statcert/rays.hpp"

#include "statcert/errors.hpp"
#include "statcert/linalg.hpp"

#include <algorithm>

namespace statcert {

namespace {

std::vector<bool> zero_set(const std::vector<RVector>& rows, std::size_t count,
                           const RVector& ray) {
    std::vector<bool> z(count, false);
    for (std::size_t i = 0; i < count; ++i)
        z[i] = rows[i].dot(ray) == 0;
    return z;
}

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

}  // namespace

RayBasis extreme_rays(const LinearSystem& cone) {
    if (!cone.homogeneous())
        throw InputError("extreme_rays requires a homogeneous system");
    const Eigen::Index n = cone.dim;

    std::vector<RVector> all_rows;
    for (const auto& r : cone.eq) all_rows.push_back(r.a);
    for (const auto& r : cone.ineq) all_rows.push_back(r.a);

    RayBasis out;
    out.lineality = rank_and_nullspace(all_rows, n).nullspace;
    const auto units = complement_with_units(out.lineality, n);
    const Eigen::Index d = static_cast<Eigen::Index>(units.size());
    if (d == 0) return out;

    RMatrix v(n, d);
    for (Eigen::Index j = 0; j < d; ++j) v.col(j) = units[static_cast<std::size_t>(j)];

    // All constraints as b.s <= 0 rows in the pointed quotient coordinates.
    std::vector<RVector> rows;
    for (const auto& r : cone.eq) {
        RVector b = v.transpose() * r.a;
        rows.push_back(b);
        rows.push_back(RVector(-b));
    }
    for (const auto& r : cone.ineq) rows.push_back(RVector(v.transpose() * r.a));

    // The quotient cone is pointed, so d independent rows exist.
    std::vector<std::size_t> init;
    std::vector<RVector> picked;
    for (std::size_t i = 0; i < rows.size() && static_cast<Eigen::Index>(init.size()) < d; ++i) {
        picked.push_back(rows[i]);
        if (rank_and_nullspace(picked, d).independent)
            init.push_back(i);
        else
            picked.pop_back();
    }
    if (static_cast<Eigen::Index>(init.size()) != d)
        throw CertificateError("pointed quotient cone without full-rank constraints");

    RMatrix b0(d, d);
    for (Eigen::Index k = 0; k < d; ++k) b0.row(k) = picked[static_cast<std::size_t>(k)];
    RMatrix id = RMatrix::Identity(d, d);
    std::vector<RVector> gen;
    for (Eigen::Index k = 0; k < d; ++k) {
        auto col = solve_particular(b0, RVector(-id.col(k)));
        if (!col) throw CertificateError("singular initial basis in double description");
        gen.push_back(*normalize_ray(*col));
    }

    // Incremental double description over the not-yet-processed rows.
    std::vector<bool> used(rows.size(), false);
    for (auto i : init) used[i] = true;
    std::vector<RVector> processed_rows = picked;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (used[i]) continue;
        const RVector& b = rows[i];
        std::vector<RVector> keep, minus, plus;
        for (const auto& r : gen) {
            const Rational val = b.dot(r);
            if (val <= 0) keep.push_back(r);
            if (val < 0) minus.push_back(r);
            if (val > 0) plus.push_back(r);
        }
        std::vector<std::vector<bool>> zs;
        zs.reserve(gen.size());
        for (const auto& r : gen) zs.push_back(zero_set(processed_rows, processed_rows.size(), r));
        for (const auto& rm : minus) {
            for (const auto& rp : plus) {
                const auto zm = zero_set(processed_rows, processed_rows.size(), rm);
                const auto zp = zero_set(processed_rows, processed_rows.size(), rp);
                std::vector<bool> common(zm.size());
                for (std::size_t k = 0; k < zm.size(); ++k) common[k] = zm[k] && zp[k];
                bool adjacent = true;
                for (std::size_t g = 0; g < gen.size() && adjacent; ++g) {
                    if (vec_equal(gen[g], rm) || vec_equal(gen[g], rp)) continue;
                    if (subset_of(common, zs[g])) adjacent = false;
                }
                if (!adjacent) continue;
                RVector fresh = b.dot(rp) * rm - b.dot(rm) * rp;
                auto norm = normalize_ray(fresh);
                if (norm) keep.push_back(*norm);
            }
        }
        std::sort(keep.begin(), keep.end(), lex_less);
        keep.erase(std::unique(keep.begin(), keep.end(), vec_equal), keep.end());
        gen = std::move(keep);
        processed_rows.push_back(b);
        used[i] = true;
    }

    for (const auto& s : gen) {
        RVector x = v * s;
        out.rays.push_back(*normalize_ray(x));
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end(), vec_equal), out.rays.end());
    return out;
}

bool in_conic_hull(const RayBasis& rep, const RVector& x) {
    const Eigen::Index nr = static_cast<Eigen::Index>(rep.rays.size());
    const Eigen::Index nl = static_cast<Eigen::Index>(rep.lineality.size());
    if (nr + nl == 0) return is_zero(x);
    LinearSystem sys(nr + nl);
    for (Eigen::Index coord = 0; coord < x.size(); ++coord) {
        RVector row = zero_vector(nr + nl);
        for (Eigen::Index j = 0; j < nr; ++j) row(j) = rep.rays[static_cast<std::size_t>(j)](coord);
        for (Eigen::Index j = 0; j < nl; ++j)
            row(nr + j) = rep.lineality[static_cast<std::size_t>(j)](coord);
        sys.add_eq(row, x(coord));
    }
    for (Eigen::Index j = 0; j < nr; ++j) {
        RVector row = zero_vector(nr + nl);
        row(j) = -1;
        sys.add_ineq(row, 0);
    }
    return lp_feasible(sys).status == LpStatus::Optimal;
}

}  // namespace statcert
