#pragma once

#include "execacc/core_model.hpp"
#include "execacc/simulator.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace execacc {

ConfusionCounts tally(std::span<const ClassifiedRecord> classified) noexcept;

// (TP + TN) / n. Throws UndefinedMetricError when n == 0.
double execution_accuracy(const ConfusionCounts &counts);
double execution_accuracy(std::span<const ClassifiedRecord> classified);

// Same quantity computed from membership alone: the share of records whose
// world time and injected time are both inside I or both outside I.
double execution_accuracy_by_membership(std::span<const ClassifiedRecord> classified,
                                        const ConstraintInterval &interval);

struct OffsetStats {
    double mean = 0.0;
    double max = 0.0;
    double min = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
    std::uint64_t n = 0;
};

// Nearest-rank percentile (p in (0, 100]) of an ascending-sorted sample.
double nearest_rank(std::span<const double> sorted, double p);

// Stats over t_hat - t_x. Throws UndefinedMetricError on an empty sample.
OffsetStats offset_stats(std::span<const double> offsets);
OffsetStats injection_offsets(const SimTrace &trace);

struct BatchFrequencies {
    double tp = 0.0;
    double fp = 0.0;
    double tn = 0.0;
    double fn = 0.0;
    double accuracy = 0.0;
};

struct Batch {
    double batch_start = 0.0;
    std::uint64_t count = 0;
    // Unset for empty batches.
    std::optional<BatchFrequencies> freq;
};

struct BatchTable {
    Window window;
    std::vector<Batch> batches;

    // Index of the batch covering world time t, or nullopt outside the window.
    std::optional<std::size_t> batch_index(double t) const noexcept;
};

// Number of one-second batches a window splits into; the final partial second
// belongs to the last batch.
std::size_t batch_count(const Window &window) noexcept;

// Throws OutOfWindowError if any record was sent outside the window.
BatchTable batch_frequencies(std::span<const ClassifiedRecord> classified, const Window &window);

// Per-batch mean over the rounds where the batch is non-empty; counts are
// summed. Throws ShapeError on an empty list or mismatched batch structure.
BatchTable average_batch_tables(std::span<const BatchTable> tables);

// Count-weighted mean of the per-batch accuracies.
double weighted_accuracy(const BatchTable &table);

} // namespace execacc
