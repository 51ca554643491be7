#include "chordcut/facet.hpp"
#include "chordcut/tight_set.hpp"

#include <benchmark/benchmark.h>

using namespace chordcut;

static void BM_AffineRankOfTightSet(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const int q = static_cast<int>(state.range(1));
    const TightSet t = enumerate_tight(k, q, TightMethod::structured);
    for (auto _ : state) benchmark::DoNotOptimize(affine_rank(t.vertices));
    state.counters["vertices"] = static_cast<double>(t.vertices.size());
}
BENCHMARK(BM_AffineRankOfTightSet)->Args({7, 2})->Args({10, 3})->Args({13, 4})->Args({16, 5})->Unit(benchmark::kMillisecond);
