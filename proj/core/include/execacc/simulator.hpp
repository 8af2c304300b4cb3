#pragma once

#include "execacc/core_model.hpp"
#include "execacc/injection.hpp"
#include "execacc/latency.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace execacc {

// Experiment window J = [start, end] in world seconds.
struct Window {
    double start = 0.0;
    double end = 0.0;

    double length() const noexcept { return end - start; }
    bool covers(const ConstraintInterval &interval) const noexcept {
        return start <= static_cast<double>(interval.lower()) && static_cast<double>(interval.upper()) <= end;
    }

    friend constexpr bool operator==(const Window &, const Window &) = default;
};

struct SimConfig {
    std::int64_t blocktime = 1;
    double recommit_interval = 0.0;
    LatencyModel latency = latency::Constant{0.0};
    TimestampPolicy policy = policy::WallClockFloor{};
    InjectionMethod method = InjectionMethod::BlockTimestamp;
    ConstraintInterval interval{0, 0};
    Window window;
    double tx_rate = 1.0;

    friend bool operator==(const SimConfig &, const SimConfig &) = default;
};

// Throws ValidationError on any violated field constraint. With
// require_window_covers_interval, also rejects J that does not contain I.
void validate(const SimConfig &config, bool require_window_covers_interval = true);

struct Block {
    std::uint64_t height = 0;
    BlockTimestamp timestamp;
    WorldTime production_time;

    friend constexpr bool operator==(const Block &, const Block &) = default;
};

struct SimTrace {
    // Ordered by sent_at (equivalently by id).
    std::vector<TransactionRecord> records;
    // Ordered by height, starting at 1. Empty blocks are kept.
    std::vector<Block> blocks;
    SimConfig config_echo;
    std::uint64_t seed = 0;
};

struct ClassifiedRecord {
    TransactionRecord record;
    Classification classification;
};

// Send times start + k / rate for k = 0, 1, ... strictly below end.
std::vector<WorldTime> schedule_transactions(const Window &window, double rate);

// Runs the event loop over explicit send times. Does not require J to cover I,
// so it can drive hand-built scenarios. send_times must be ascending.
SimTrace simulate(const SimConfig &config, std::span<const WorldTime> send_times, std::uint64_t seed);

// Full experiment semantics: validates (including J covering I), schedules
// sends over the window and simulates. Deterministic in (config, seed).
SimTrace run_simulation(const SimConfig &config, std::uint64_t seed);

// Throws IncompleteTraceError if any record was never included.
std::vector<ClassifiedRecord> classify_trace(const SimTrace &trace, const ConstraintInterval &interval);

} // namespace execacc
