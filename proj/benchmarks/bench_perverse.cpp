#include "stabctab/perverse.hpp"

#include <benchmark/benchmark.h>

using namespace stabctab;

namespace {

void BM_StablePerverseTable(benchmark::State& state) {
    const auto s = SurfaceTopology::enriques();
    for (auto _ : state) benchmark::DoNotOptimize(stable_perverse_table(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_StablePerverseTable)->Arg(4)->Arg(10)->Arg(16);

void BM_SolveFromTower(benchmark::State& state) {
    const auto tower = build_tower(SurfaceTopology::enriques(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_perverse(tower));
}
BENCHMARK(BM_SolveFromTower)->Arg(4)->Arg(10)->Arg(16);

void BM_OracleCheck(benchmark::State& state) {
    const auto s = SurfaceTopology::bielliptic();
    for (auto _ : state) benchmark::DoNotOptimize(oracle_check(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OracleCheck)->Arg(10);

}  // namespace
