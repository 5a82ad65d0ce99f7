#include "stabctab/germ.hpp"

#include <benchmark/benchmark.h>

using namespace stabctab;

namespace {

// x^p + y^q: mu = (p-1)(q-1)
void BM_MilnorBrieskorn(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    const auto g = CurveGerm::parse("x^" + std::to_string(p) + " + y^" + std::to_string(p + 1));
    for (auto _ : state) benchmark::DoNotOptimize(milnor(g));
}
BENCHMARK(BM_MilnorBrieskorn)->Arg(3)->Arg(5)->Arg(7);

void BM_TjurinaE8(benchmark::State& state) {
    const auto g = CurveGerm::parse("x^3 + y^5");
    for (auto _ : state) benchmark::DoNotOptimize(tjurina(g));
}
BENCHMARK(BM_TjurinaE8);

void BM_AnalyzeNonQuasiHomogeneous(benchmark::State& state) {
    const auto g = CurveGerm::parse("x^4 + y^5 + x^2*y^3");
    for (auto _ : state) benchmark::DoNotOptimize(analyze_germ(g));
}
BENCHMARK(BM_AnalyzeNonQuasiHomogeneous);

}  // namespace
