#include <benchmark/benchmark.h>

#include "statcert/corpus.hpp"
#include "statcert/qec.hpp"
#include "statcert/rays.hpp"
#include "statcert/stationarity.hpp"

namespace {

using namespace statcert;

void BM_qec_directional_cone(benchmark::State& state) {
    const RVector a = make_rvector({0, 0});
    const RVector u = make_rvector({-1, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qec_directional_normal(a, u).pieces.size());
    }
}

void BM_generators_of_tlin(benchmark::State& state) {
    const Problem p = corpus_problem("example3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(generators_of_Tlin(p.point).rays.size());
    }
}

void BM_extreme_rays(benchmark::State& state) {
    const long dim = state.range(0);
    LinearSystem cone(dim);
    for (long i = 0; i < dim; ++i) {
        RVector e = RVector::Zero(dim);
        e(i) = -1;
        cone.add_ineq(e, 0);
        if (i + 1 < dim) {
            RVector mix = RVector::Zero(dim);
            mix(i) = -1;
            mix(i + 1) = 1;
            cone.add_ineq(mix, 0);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(extreme_rays(cone).rays.size());
    }
}

}  // namespace

BENCHMARK(BM_qec_directional_cone);
BENCHMARK(BM_generators_of_tlin);
BENCHMARK(BM_extreme_rays)->Arg(4)->Arg(6);
