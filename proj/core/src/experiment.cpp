#include "execacc/experiment.hpp"

#include "execacc/errors.hpp"
#include "execacc/seeds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace execacc {

void validate(const ExperimentConfig &config) {
    if (config.rounds < 1) {
        throw ValidationError("rounds must be >= 1");
    }
    validate(config.sim, true);
}

namespace {

RoundResult run_round(const SimConfig &sim, std::uint64_t seed) {
    RoundResult round;
    round.seed = seed;
    round.trace = run_simulation(sim, seed);
    round.classified = classify_trace(round.trace, sim.interval);
    round.table = batch_frequencies(round.classified, sim.window);
    round.counts = tally(round.classified);
    return round;
}

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
    unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(w, jobs));
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig &config, unsigned workers) {
    validate(config);

    const std::size_t n_rounds = config.rounds;
    std::vector<RoundResult> rounds(n_rounds);
    std::vector<std::exception_ptr> failures(n_rounds);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t r = next++; r < n_rounds; r = next++) {
            try {
                rounds[r] = run_round(config.sim, seeds::round_seed(config.master_seed, r));
            } catch (...) {
                failures[r] = std::current_exception();
            }
        }
    };
    const unsigned n_workers = resolve_workers(workers, n_rounds);
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    }
    for (const auto &f : failures) {
        if (f) std::rethrow_exception(f);
    }

    ExperimentResult result;
    result.config_echo = config;

    std::vector<BatchTable> tables;
    std::vector<double> offsets;
    tables.reserve(n_rounds);
    result.per_round_accuracy.reserve(n_rounds);
    for (const auto &round : rounds) {
        tables.push_back(round.table);
        result.per_round_accuracy.push_back(execution_accuracy(round.counts));
        result.pooled_counts.tp += round.counts.tp;
        result.pooled_counts.fp += round.counts.fp;
        result.pooled_counts.tn += round.counts.tn;
        result.pooled_counts.fn += round.counts.fn;
        for (const auto &rec : round.trace.records) offsets.push_back(rec.injected_at - rec.sent_at.seconds());
    }
    result.averaged = average_batch_tables(tables);
    result.overall_accuracy = execution_accuracy(result.pooled_counts);
    result.offsets = offset_stats(offsets);
    result.rounds = std::move(rounds);
    return result;
}

ExperimentConfig preset(std::string_view name) {
    ExperimentConfig config;
    config.rounds = 30;
    config.master_seed = 0;
    config.label = std::string(name);
    config.sim.blocktime = 1;
    config.sim.recommit_interval = 0.0;
    config.sim.latency = latency::Constant{0.0};
    config.sim.policy = policy::WallClockFloor{};
    config.sim.method = InjectionMethod::BlockTimestamp;
    config.sim.tx_rate = 1.0;
    if (name == "local") {
        config.sim.interval = ConstraintInterval(15, 30);
        config.sim.window = Window{0.0, 45.0};
    } else if (name == "test") {
        config.sim.interval = ConstraintInterval(60, 120);
        config.sim.window = Window{0.0, 135.0};
    } else {
        throw LookupError("unknown preset '" + std::string(name) + "' (expected local or test)");
    }
    return config;
}

std::vector<ExperimentResult> sweep_blocktime(const ExperimentConfig &base, std::span<const std::int64_t> blocktimes,
                                              unsigned workers) {
    if (blocktimes.empty()) {
        throw ValidationError("blocktime sweep needs at least one blocktime");
    }
    for (const auto b : blocktimes) {
        if (b < 1) throw ValidationError("sweep blocktimes must be >= 1");
    }
    std::vector<ExperimentResult> results;
    results.reserve(blocktimes.size());
    for (const auto b : blocktimes) {
        ExperimentConfig point = base;
        point.sim.blocktime = b;
        results.push_back(run_experiment(point, workers));
    }
    return results;
}

DipReport dip_report(const BatchTable &table, const ConstraintInterval &interval) {
    if (table.batches.empty() || !table.window.covers(interval)) {
        throw ValidationError("batch table does not cover the constraint interval");
    }
    const auto size = static_cast<std::int64_t>(table.batches.size());
    auto first_batch_at = [&](std::int64_t second) {
        const auto idx = static_cast<std::int64_t>(std::floor(static_cast<double>(second) - table.window.start));
        return std::clamp<std::int64_t>(idx, 0, size);
    };
    auto inaccurate = [&](std::int64_t i) {
        const auto &b = table.batches[static_cast<std::size_t>(i)];
        return b.freq && b.freq->accuracy < 1.0;
    };
    auto run_down = [&](std::int64_t from, std::int64_t floor_idx) {
        std::int64_t width = 0;
        for (std::int64_t i = from; i >= floor_idx && inaccurate(i); --i) ++width;
        return width;
    };
    auto run_up = [&](std::int64_t from, std::int64_t end_idx) {
        std::int64_t width = 0;
        for (std::int64_t i = from; i < end_idx && inaccurate(i); ++i) ++width;
        return width;
    };

    // Batches [lo, hi) hold sends in [a, b); batch hi holds b itself and the
    // second after it, which is mostly outside I.
    const std::int64_t lo = first_batch_at(interval.lower());
    const std::int64_t hi = std::max(lo, first_batch_at(interval.upper()));

    DipReport report;
    report.pre_lower_width = run_down(lo - 1, 0);
    report.in_interval_lower_width = run_up(lo, hi);
    report.in_interval_upper_width = run_down(hi - 1, lo);
    report.post_upper_width = run_up(hi, size);
    return report;
}

} // namespace execacc
