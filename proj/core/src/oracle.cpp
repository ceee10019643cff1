#include "statcert/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "statcert/errors.hpp"

namespace statcert {

namespace {

// sign of poly(x) + offset + c * |x_i|^(3/2), decided on squared forms
int eval_sign(const SymbolicFunction& s, const RVector& x, const Rational& offset) {
    const Rational A = poly_value(s, x) + offset;
    if (!s.has_abspow() || s.abspow_coeff == 0) return sign(A);
    const Rational t = x(*s.abspow_var);
    if (t == 0) return sign(A);
    const int abspow_sign = sign(s.abspow_coeff);
    if (A == 0) return abspow_sign;
    if (sign(A) == abspow_sign) return abspow_sign;
    // opposite signs: |A| versus |c| |t|^(3/2), compared squared
    const Rational cmp =
        A * A - s.abspow_coeff * s.abspow_coeff * abs(t) * abs(t) * abs(t);
    if (cmp > 0) return sign(A);
    if (cmp < 0) return abspow_sign;
    return 0;
}

const SymbolicProblem& symbolic_of(const Problem& p) {
    if (!p.symbolic) throw UnavailableError("problem carries no symbolic block");
    return *p.symbolic;
}

OracleResult result_at(const Problem& p, const RVector& x) {
    OracleResult out;
    out.found = true;
    out.x = x;
    out.f_value = symbolic_value(symbolic_of(p).f, x);
    return out;
}

}  // namespace

bool symbolic_feasible(const Problem& p, const RVector& x) {
    const SymbolicProblem& s = symbolic_of(p);
    if (x.size() != p.point.n) throw InputError("oracle point dimension mismatch");
    for (const SymbolicFunction& f : s.g)
        if (eval_sign(f, x, 0) > 0) return false;
    for (const SymbolicFunction& f : s.h)
        if (eval_sign(f, x, 0) != 0) return false;
    std::vector<int> sG, sH;
    for (const SymbolicFunction& f : s.G) sG.push_back(eval_sign(f, x, 0));
    for (const SymbolicFunction& f : s.H) sH.push_back(eval_sign(f, x, 0));
    for (std::size_t i = 0; i < sG.size(); ++i) {
        if (sG[i] < 0 || sH[i] < 0) return false;
        if (sG[i] != 0 && sH[i] != 0) return false;
    }
    return true;
}

bool symbolic_descent(const Problem& p, const RVector& x) {
    if (!symbolic_feasible(p, x)) return false;
    return eval_sign(symbolic_of(p).f, x, -p.point.f.value) < 0;
}

OracleResult grid_oracle(const Problem& p, const Rational& radius, long resolution) {
    symbolic_of(p);
    if (radius <= 0) throw InputError("oracle radius must be positive");
    if (resolution < 1) throw InputError("oracle resolution must be at least 1");
    const long n = p.point.n;

    // enumerate offsets k, ordered by |k|_1 then lexicographically
    std::vector<std::vector<long>> offsets;
    std::vector<long> k(n, -resolution);
    for (;;) {
        offsets.push_back(k);
        long j = n - 1;
        while (j >= 0 && k[j] == resolution) k[j--] = -resolution;
        if (j < 0) break;
        ++k[j];
    }
    std::stable_sort(offsets.begin(), offsets.end(),
                     [](const std::vector<long>& a, const std::vector<long>& b) {
                         long la = 0, lb = 0;
                         for (long v : a) la += std::abs(v);
                         for (long v : b) lb += std::abs(v);
                         if (la != lb) return la < lb;
                         return a < b;
                     });

    const Rational step = radius / resolution;
    for (const std::vector<long>& off : offsets) {
        bool origin = std::all_of(off.begin(), off.end(), [](long v) { return v == 0; });
        if (origin) continue;
        RVector x = p.point.x;
        for (long j = 0; j < n; ++j) x(j) += step * off[j];
        if (symbolic_descent(p, x)) return result_at(p, x);
    }
    return {};
}

OracleResult probe_direction(const Problem& p, const RVector& d, const Rational& radius,
                             long resolution) {
    symbolic_of(p);
    if (radius <= 0) throw InputError("oracle radius must be positive");
    if (resolution < 1) throw InputError("oracle resolution must be at least 1");
    if (d.size() != p.point.n) throw InputError("probe direction dimension mismatch");
    const Rational step = radius / resolution;
    for (long k = 1; k <= resolution; ++k) {
        RVector x = p.point.x + (step * k) * d;
        if (symbolic_descent(p, x)) return result_at(p, x);
    }
    return {};
}

}  // namespace statcert
