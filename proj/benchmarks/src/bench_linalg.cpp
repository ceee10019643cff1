#include <benchmark/benchmark.h>

#include "statcert/linalg.hpp"

namespace {

using namespace statcert;

std::vector<RVector> dense_rows(long rows, long dim) {
    std::vector<RVector> out;
    long v = 1;
    for (long r = 0; r < rows; ++r) {
        RVector row(dim);
        for (long c = 0; c < dim; ++c) {
            row(c) = Rational(v % 17 - 8, 1 + (v % 5));
            v = v * 48271 % 2147483647;
        }
        out.push_back(row);
    }
    return out;
}

void BM_rank_and_nullspace(benchmark::State& state) {
    const long dim = state.range(0);
    const std::vector<RVector> rows = dense_rows(dim, dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_and_nullspace(rows, dim).rank);
    }
}

}  // namespace

BENCHMARK(BM_rank_and_nullspace)->Arg(4)->Arg(8)->Arg(16);
