#include <benchmark/benchmark.h>

#include "qlzoc/analyze.hpp"
#include "qlzoc/bitsim.hpp"

using namespace qlzoc;

static void BM_BuildSequential(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_design(DesignId::TaOpQlzc, m));
    }
}
BENCHMARK(BM_BuildSequential)->Arg(16)->Arg(64);

static void BM_ExhaustiveSweep(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        auto rep = verify_exhaustive(DesignId::TaOpQlzc, m);
        benchmark::DoNotOptimize(rep);
    }
    state.SetItemsProcessed(state.iterations() * (1ll << m));
}
BENCHMARK(BM_ExhaustiveSweep)->Arg(10)->Arg(14);

static void BM_ParallelSweep(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = verify_exhaustive(DesignId::FoTaOpPqlzc, 16);
        benchmark::DoNotOptimize(rep);
    }
    state.SetItemsProcessed(state.iterations() * (1ll << 16));
}
BENCHMARK(BM_ParallelSweep);

static void BM_ExpandAndMeasure(benchmark::State& state) {
    const auto m = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_design(DesignId::TaOpQlzc, m));
    }
}
BENCHMARK(BM_ExpandAndMeasure)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
