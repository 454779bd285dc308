#include <benchmark/benchmark.h>

#include "resgaps/catalog.hpp"
#include "resgaps/gap_engine.hpp"

using namespace resgaps;

namespace {

const Catalog& cat() {
    static const Catalog c = Catalog::embedded();
    return c;
}

}  // namespace

static void BM_DecideRankOne(benchmark::State& state) {
    const SurfaceCase& c = cat().lookup(43);
    for (auto _ : state) benchmark::DoNotOptimize(decide(c, state.range(0)));
}
BENCHMARK(BM_DecideRankOne)->Arg(1)->Arg(100)->Arg(10000);

static void BM_DecideRankEight(benchmark::State& state) {
    const SurfaceCase& c = cat().lookup(1);
    for (auto _ : state) benchmark::DoNotOptimize(decide(c, state.range(0)));
}
BENCHMARK(BM_DecideRankEight)->Arg(1)->Arg(200);

static void BM_DecideRankTwo(benchmark::State& state) {
    const SurfaceCase& c = cat().lookup(31);
    for (auto _ : state) benchmark::DoNotOptimize(decide(c, state.range(0)));
}
BENCHMARK(BM_DecideRankTwo)->Arg(1)->Arg(50);

static void BM_Density43(benchmark::State& state) {
    const SurfaceCase& c = cat().lookup(43);
    for (auto _ : state) benchmark::DoNotOptimize(gap_density(c, state.range(0)));
}
BENCHMARK(BM_Density43)->Arg(1000)->Unit(benchmark::kMillisecond);
