#include <benchmark/benchmark.h>

#include "fht/complexfn.hpp"

using namespace fht;

static void BM_hyp_pair(benchmark::State& state) {
    cplx a(0.1, -0.4);
    CPoint eta(cplx(2.3, 0.4));
    for (auto _ : state) {
        auto v = hyp_pair_at_infinity(a, eta);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_hyp_pair);

BENCHMARK_MAIN();
