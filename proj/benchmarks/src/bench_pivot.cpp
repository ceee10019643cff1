#include <benchmark/benchmark.h>

#include "statcert/corpus.hpp"
#include "statcert/pivot.hpp"

namespace {

using namespace statcert;

void BM_pivot_example5(benchmark::State& state) {
    const Problem p = corpus_problem("example5");
    const WorkingSet J0 = *find_initial_working_set(p.point);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pivot(p.point, J0, 7).trace.size());
    }
}

void BM_verify_strong_m_example6(benchmark::State& state) {
    const Problem p = corpus_problem("example6");
    const WorkingSet J = WorkingSet::construct(p.point, {0, 1}, {0}, {});
    const RVector lambda = lambda_of(p.point, J);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_strong_m(p.point, J, lambda));
    }
}

}  // namespace

BENCHMARK(BM_pivot_example5);
BENCHMARK(BM_verify_strong_m_example6);
