#include <benchmark/benchmark.h>

#include "statcert/lp.hpp"

namespace {

using namespace statcert;

// transportation-flavored feasible system with a mix of rows
LinearSystem make_system(long dim) {
    LinearSystem sys(dim);
    RVector sum = RVector::Constant(dim, 1);
    sys.add_ineq(sum, Rational(dim));
    for (long i = 0; i < dim; ++i) {
        RVector e = RVector::Zero(dim);
        e(i) = -1;
        sys.add_ineq(e, 0);
        if (i + 1 < dim) {
            RVector chain = RVector::Zero(dim);
            chain(i) = 1;
            chain(i + 1) = Rational(-1, 2);
            sys.add_ineq(chain, 1);
        }
    }
    return sys;
}

void BM_lp_solve(benchmark::State& state) {
    const long dim = state.range(0);
    const LinearSystem sys = make_system(dim);
    RVector obj(dim);
    for (long i = 0; i < dim; ++i) obj(i) = Rational((i % 3) - 1, i + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lp_solve(obj, Sense::Minimize, sys).status);
    }
}

}  // namespace

BENCHMARK(BM_lp_solve)->Arg(4)->Arg(8)->Arg(16);
