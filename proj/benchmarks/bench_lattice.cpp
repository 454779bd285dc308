#include <benchmark/benchmark.h>

#include "resgaps/lattice.hpp"

using namespace resgaps;

static void BM_ShortVectorsE8(benchmark::State& state) {
    const SymMatrix g = root_gram('E', 8);
    const Rational bound(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(short_vectors(g, bound));
}
BENCHMARK(BM_ShortVectorsE8)->Arg(2)->Arg(4)->Arg(6);

static void BM_ShortVectorsDualA1x6(benchmark::State& state) {
    const SymMatrix g = realize(parse_lattice("A1*^6"));
    const Rational bound(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(short_vectors(g, bound));
}
BENCHMARK(BM_ShortVectorsDualA1x6)->Arg(2)->Arg(4);

static void BM_FindNormMiss(benchmark::State& state) {
    // A2 never takes the value 4, so the whole ellipsoid is searched
    const Enumerator e(root_gram('A', 2));
    for (auto _ : state) benchmark::DoNotOptimize(e.find_norm(Rational(4)));
}
BENCHMARK(BM_FindNormMiss);

BENCHMARK_MAIN();
