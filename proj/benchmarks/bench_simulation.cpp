#include "execacc/experiment.hpp"
#include "execacc/metrics.hpp"

#include <benchmark/benchmark.h>

using namespace execacc;

static void BM_RunSimulation(benchmark::State &state) {
    auto cfg = preset("test").sim;
    cfg.blocktime = state.range(0);
    cfg.latency = latency::Exponential{2.0};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_simulation(cfg, seed++));
    }
}
BENCHMARK(BM_RunSimulation)->Arg(1)->Arg(4)->Arg(8);

static void BM_RunSimulationHighRate(benchmark::State &state) {
    auto cfg = preset("test").sim;
    cfg.tx_rate = static_cast<double>(state.range(0));
    cfg.latency = latency::Pareto{1.0, 1.5};
    cfg.recommit_interval = 2.0;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_simulation(cfg, seed++));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(135 * cfg.tx_rate));
}
BENCHMARK(BM_RunSimulationHighRate)->Arg(10)->Arg(100);

static void BM_ClassifyAndBatch(benchmark::State &state) {
    const auto cfg = preset("test").sim;
    const auto trace = run_simulation(cfg, 1);
    for (auto _ : state) {
        const auto classified = classify_trace(trace, cfg.interval);
        benchmark::DoNotOptimize(batch_frequencies(classified, cfg.window));
    }
}
BENCHMARK(BM_ClassifyAndBatch);

static void BM_RunExperiment(benchmark::State &state) {
    auto cfg = preset("local");
    cfg.sim.latency = latency::Pareto{1.0, 1.5};
    cfg.rounds = 30;
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(cfg, workers));
    }
}
BENCHMARK(BM_RunExperiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
