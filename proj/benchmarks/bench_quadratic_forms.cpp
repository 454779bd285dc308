#include <benchmark/benchmark.h>

#include "resgaps/quadratic_form.hpp"

using namespace resgaps;

static void BM_FourSquare(benchmark::State& state) {
    const Integer n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(four_square(n));
}
BENCHMARK(BM_FourSquare)->Arg(2023)->Arg(1'000'003);

static void BM_RepresentLemmaForm(benchmark::State& state) {
    const IntQuadraticForm form = lemma_form_a4();
    const Integer n(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(represents(form, n));
}
BENCHMARK(BM_RepresentLemmaForm)->Arg(290)->Arg(10007);

static void BM_Check290(benchmark::State& state) {
    const IntQuadraticForm form = lemma_form_a4();
    for (auto _ : state) benchmark::DoNotOptimize(check_290_critical(form));
}
BENCHMARK(BM_Check290);
