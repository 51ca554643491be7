#include "chordcut/tight_set.hpp"

#include <benchmark/benchmark.h>

using namespace chordcut;

static void BM_TightStructured(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const int q = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tight(k, q, TightMethod::structured));
}
BENCHMARK(BM_TightStructured)->Args({7, 2})->Args({10, 3})->Args({13, 4})->Args({16, 5});

static void BM_TightBrute(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const int q = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tight(k, q, TightMethod::brute));
}
BENCHMARK(BM_TightBrute)->Args({7, 2})->Args({9, 4})->Unit(benchmark::kMillisecond);
