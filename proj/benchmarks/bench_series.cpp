#include "stabctab/genfunc.hpp"
#include "stabctab/series.hpp"

#include <benchmark/benchmark.h>

using namespace stabctab;

namespace {

TruncatedBiSeries sample(int order) {
    TruncatedBiSeries f = TruncatedBiSeries::one(order);
    for (int a = 1; a <= order; ++a) {
        for (int b = -a; a + std::abs(b) <= order; ++b) f.accumulate({a, b}, Rational(a + b, a + 1));
    }
    return f;
}

void BM_SeriesMultiply(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto f = sample(order), g = sample(order);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMultiply)->Arg(6)->Arg(10)->Arg(14);

void BM_SeriesInverse(benchmark::State& state) {
    const auto f = sample(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(inverse(f));
}
BENCHMARK(BM_SeriesInverse)->Arg(6)->Arg(10)->Arg(14);

void BM_GoettscheSeries(benchmark::State& state) {
    const auto s = SurfaceTopology::enriques();
    for (auto _ : state) benchmark::DoNotOptimize(goettsche_series(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GoettscheSeries)->Arg(8)->Arg(16)->Arg(24);

void BM_RemarkIdentity(benchmark::State& state) {
    const SurfaceTopology s{4, 6, 0};
    for (auto _ : state) benchmark::DoNotOptimize(check_remark_identity(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RemarkIdentity)->Arg(6)->Arg(12);

}  // namespace
