#include "execacc/metrics.hpp"

#include "execacc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace execacc {

ConfusionCounts tally(std::span<const ClassifiedRecord> classified) noexcept {
    ConfusionCounts counts;
    for (const auto &c : classified) counts = accumulate(counts, c.classification.outcome);
    return counts;
}

double execution_accuracy(const ConfusionCounts &counts) {
    if (counts.n() == 0) {
        throw UndefinedMetricError("execution accuracy is undefined for zero transactions");
    }
    return static_cast<double>(counts.correct()) / static_cast<double>(counts.n());
}

double execution_accuracy(std::span<const ClassifiedRecord> classified) {
    return execution_accuracy(tally(classified));
}

double execution_accuracy_by_membership(std::span<const ClassifiedRecord> classified,
                                        const ConstraintInterval &interval) {
    if (classified.empty()) {
        throw UndefinedMetricError("execution accuracy is undefined for zero transactions");
    }
    std::uint64_t agree = 0;
    for (const auto &c : classified) {
        const bool world_in = contains(interval, c.record.sent_at.seconds());
        const bool injected_in = contains(interval, c.record.injected_at);
        if ((world_in && injected_in) || (!world_in && !injected_in)) ++agree;
    }
    return static_cast<double>(agree) / static_cast<double>(classified.size());
}

double nearest_rank(std::span<const double> sorted, double p) {
    if (sorted.empty()) {
        throw UndefinedMetricError("percentile of an empty sample");
    }
    if (!(p > 0.0 && p <= 100.0)) {
        throw ValidationError("percentile must lie in (0, 100]");
    }
    const auto n = static_cast<double>(sorted.size());
    auto rank = static_cast<std::size_t>(std::ceil(p * n / 100.0));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    return sorted[rank - 1];
}

OffsetStats offset_stats(std::span<const double> offsets) {
    if (offsets.empty()) {
        throw UndefinedMetricError("offset statistics are undefined for zero transactions");
    }
    std::vector<double> sorted(offsets.begin(), offsets.end());
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (double v : offsets) sum += v;

    OffsetStats stats;
    stats.n = sorted.size();
    stats.mean = sum / static_cast<double>(sorted.size());
    stats.min = sorted.front();
    stats.max = sorted.back();
    stats.p50 = nearest_rank(sorted, 50.0);
    stats.p95 = nearest_rank(sorted, 95.0);
    return stats;
}

OffsetStats injection_offsets(const SimTrace &trace) {
    std::vector<double> offsets;
    offsets.reserve(trace.records.size());
    for (const auto &rec : trace.records) {
        if (!rec.included()) {
            throw IncompleteTraceError("transaction " + std::to_string(rec.id) + " was never included in a block");
        }
        offsets.push_back(rec.injected_at - rec.sent_at.seconds());
    }
    return offset_stats(offsets);
}

std::size_t batch_count(const Window &window) noexcept {
    const double full_seconds = std::floor(window.length());
    return full_seconds < 1.0 ? 1 : static_cast<std::size_t>(full_seconds);
}

std::optional<std::size_t> BatchTable::batch_index(double t) const noexcept {
    if (batches.empty() || !(t >= window.start && t <= window.end)) return std::nullopt;
    const auto idx = static_cast<std::size_t>(std::floor(t - window.start));
    return std::min(idx, batches.size() - 1);
}

namespace {

BatchTable empty_table(const Window &window) {
    BatchTable table;
    table.window = window;
    const std::size_t n = batch_count(window);
    table.batches.resize(n);
    for (std::size_t i = 0; i < n; ++i) table.batches[i].batch_start = window.start + static_cast<double>(i);
    return table;
}

} // namespace

BatchTable batch_frequencies(std::span<const ClassifiedRecord> classified, const Window &window) {
    if (!(window.start <= window.end)) {
        throw ValidationError("window requires start <= end");
    }
    BatchTable table = empty_table(window);
    std::vector<ConfusionCounts> counts(table.batches.size());
    for (const auto &c : classified) {
        const double t = c.record.sent_at.seconds();
        const auto idx = table.batch_index(t);
        if (!idx) {
            throw OutOfWindowError("transaction " + std::to_string(c.record.id) + " sent at " + std::to_string(t) +
                                   " lies outside the experiment window");
        }
        counts[*idx] = accumulate(counts[*idx], c.classification.outcome);
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const auto &k = counts[i];
        auto &batch = table.batches[i];
        batch.count = k.n();
        if (batch.count == 0) continue;
        const auto n = static_cast<double>(batch.count);
        BatchFrequencies f;
        f.tp = static_cast<double>(k.tp) / n;
        f.fp = static_cast<double>(k.fp) / n;
        f.tn = static_cast<double>(k.tn) / n;
        f.fn = static_cast<double>(k.fn) / n;
        f.accuracy = static_cast<double>(k.correct()) / n;
        batch.freq = f;
    }
    return table;
}

BatchTable average_batch_tables(std::span<const BatchTable> tables) {
    if (tables.empty()) {
        throw ShapeError("cannot average zero batch tables");
    }
    const BatchTable &first = tables.front();
    for (const auto &t : tables) {
        bool same = t.window == first.window && t.batches.size() == first.batches.size();
        for (std::size_t i = 0; same && i < t.batches.size(); ++i) {
            same = t.batches[i].batch_start == first.batches[i].batch_start;
        }
        if (!same) {
            throw ShapeError("batch tables do not share the same window and batch structure");
        }
    }

    BatchTable out = empty_table(first.window);
    for (std::size_t i = 0; i < out.batches.size(); ++i) {
        BatchFrequencies sum;
        std::size_t rounds = 0;
        std::uint64_t count = 0;
        for (const auto &t : tables) {
            const Batch &b = t.batches[i];
            count += b.count;
            if (!b.freq) continue;
            sum.tp += b.freq->tp;
            sum.fp += b.freq->fp;
            sum.tn += b.freq->tn;
            sum.fn += b.freq->fn;
            sum.accuracy += b.freq->accuracy;
            ++rounds;
        }
        out.batches[i].count = count;
        if (rounds == 0) continue;
        const auto r = static_cast<double>(rounds);
        out.batches[i].freq = BatchFrequencies{sum.tp / r, sum.fp / r, sum.tn / r, sum.fn / r, sum.accuracy / r};
    }
    return out;
}

double weighted_accuracy(const BatchTable &table) {
    double weighted = 0.0;
    std::uint64_t total = 0;
    for (const auto &b : table.batches) {
        if (!b.freq) continue;
        weighted += static_cast<double>(b.count) * b.freq->accuracy;
        total += b.count;
    }
    if (total == 0) {
        throw UndefinedMetricError("batch table holds no transactions");
    }
    return weighted / static_cast<double>(total);
}

} // namespace execacc
