#include "stabctab/nslattice.hpp"

#include <benchmark/benchmark.h>

using namespace stabctab;

namespace {

void BM_DecomposeBielliptic(benchmark::State& state) {
    const auto m = bielliptic_rank2_preset();
    const std::int64_t k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m, {k, k}));
}
BENCHMARK(BM_DecomposeBielliptic)->Arg(2)->Arg(8)->Arg(32);

void BM_DecomposeEnriques(benchmark::State& state) {
    const auto m = enriques_preset();
    const DivisorClass beta{1, 1, 0, 0, 0, 0, 0, 0, 0, 0};
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m, beta));
}
BENCHMARK(BM_DecomposeEnriques)->Unit(benchmark::kMillisecond);

void BM_EnriquesD0(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enriques_d0(10, 2, 3));
}
BENCHMARK(BM_EnriquesD0);

}  // namespace
