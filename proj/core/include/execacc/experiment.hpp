#pragma once

#include "execacc/metrics.hpp"
#include "execacc/simulator.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace execacc {

struct ExperimentConfig {
    SimConfig sim;
    std::uint32_t rounds = 1;
    std::uint64_t master_seed = 0;
    std::string label;

    friend bool operator==(const ExperimentConfig &, const ExperimentConfig &) = default;
};

void validate(const ExperimentConfig &config);

struct RoundResult {
    std::uint64_t seed = 0;
    SimTrace trace;
    std::vector<ClassifiedRecord> classified;
    BatchTable table;
    ConfusionCounts counts;
};

struct ExperimentResult {
    BatchTable averaged;
    std::vector<double> per_round_accuracy;
    // Pooled (TP + TN) / n over every round.
    double overall_accuracy = 0.0;
    ConfusionCounts pooled_counts;
    OffsetStats offsets;
    ExperimentConfig config_echo;
    std::vector<RoundResult> rounds;
};

// Runs config.rounds independent simulations, in parallel when `workers` > 1
// (0 picks the hardware concurrency). The result never depends on `workers`.
ExperimentResult run_experiment(const ExperimentConfig &config, unsigned workers = 0);

// "local" or "test"; throws LookupError otherwise.
ExperimentConfig preset(std::string_view name);

// One result per blocktime; every sweep point reuses base.master_seed.
std::vector<ExperimentResult> sweep_blocktime(const ExperimentConfig &base, std::span<const std::int64_t> blocktimes,
                                              unsigned workers = 0);

struct DipReport {
    std::int64_t pre_lower_width = 0;
    std::int64_t in_interval_lower_width = 0;
    std::int64_t in_interval_upper_width = 0;
    std::int64_t post_upper_width = 0;

    friend constexpr bool operator==(const DipReport &, const DipReport &) = default;
};

// Widths, in one-second batches, of the runs of inaccurate batches touching
// each side of each bound. Empty batches end a run. Throws ValidationError if
// the table does not cover the interval.
DipReport dip_report(const BatchTable &table, const ConstraintInterval &interval);

} // namespace execacc
