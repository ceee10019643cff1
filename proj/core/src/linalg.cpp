#include "statcert/linalg.hpp"

namespace statcert {

RMatrix stack_rows(const std::vector<RVector>& rows, Eigen::Index cols) {
    RMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        m.row(i) = rows[static_cast<std::size_t>(i)].transpose();
    return m;
}

std::vector<Eigen::Index> rref_in_place(RMatrix& m) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pr = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (m(r, col) != 0) { pr = r; break; }
        }
        if (pr < 0) continue;
        if (pr != row) m.row(pr).swap(m.row(row));
        const Rational inv = m(row, col);
        for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) /= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

EliminationResult rank_and_nullspace(const std::vector<RVector>& rows, Eigen::Index dim) {
    const Eigen::Index n = rows.empty() ? dim : rows.front().size();
    EliminationResult out;
    if (rows.empty()) {
        out.rank = 0;
        out.independent = true;
        for (Eigen::Index j = 0; j < n; ++j) {
            RVector v = zero_vector(n);
            v(j) = 1;
            out.nullspace.push_back(v);
        }
        return out;
    }
    RMatrix m = stack_rows(rows, n);
    const auto pivots = rref_in_place(m);
    out.rank = static_cast<long>(pivots.size());
    out.independent = out.rank == static_cast<long>(rows.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (Eigen::Index f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        RVector v = zero_vector(n);
        v(f) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v(pivots[k]) = -m(static_cast<Eigen::Index>(k), f);
        out.nullspace.push_back(v);
    }
    return out;
}

std::optional<RVector> solve_particular(const RMatrix& a, const RVector& b) {
    RMatrix aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    RVector x = zero_vector(a.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x(pivots[k]) = aug(static_cast<Eigen::Index>(k), a.cols());
    return x;
}

bool rows_independent(const std::vector<RVector>& rows) {
    if (rows.empty()) return true;
    return rank_and_nullspace(rows).independent;
}

std::vector<RVector> complement_with_units(const std::vector<RVector>& basis, Eigen::Index n) {
    std::vector<RVector> family = basis;
    std::vector<RVector> added;
    long rank = static_cast<long>(basis.size());
    for (Eigen::Index j = 0; j < n && rank < n; ++j) {
        RVector e = zero_vector(n);
        e(j) = 1;
        family.push_back(e);
        const auto r = rank_and_nullspace(family, n);
        if (r.rank == rank + 1) {
            added.push_back(e);
            ++rank;
        } else {
            family.pop_back();
        }
    }
    return added;
}

}  // namespace statcert
