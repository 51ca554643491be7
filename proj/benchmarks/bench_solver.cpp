#include "chordcut/solver.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace chordcut;

namespace {

Instance random_instance(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(-5, 5);
    Instance inst(n);
    for (auto& w : inst.weights) w = weight(rng);
    return inst;
}

}  // namespace

static void BM_BranchAndCut(benchmark::State& state)
{
    const Instance inst = random_instance(static_cast<int>(state.range(0)), 7);
    BranchAndCutConfig config;
    config.chorded_cuts = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(branch_and_cut(inst, config));
}
BENCHMARK(BM_BranchAndCut)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state)
{
    const Instance inst = random_instance(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(inst));
}
BENCHMARK(BM_BruteForce)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
