#pragma once

#include "execacc/experiment.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace execacc::gen {

using Rng = std::mt19937_64;

inline double uniform(Rng &rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline std::int64_t integer(Rng &rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline LatencyModel latency_model(Rng &rng) {
    switch (integer(rng, 0, 3)) {
    case 0: return latency::Constant{uniform(rng, 0.0, 5.0)};
    case 1: {
        const double lo = uniform(rng, 0.0, 3.0);
        return latency::Uniform{lo, lo + uniform(rng, 0.0, 4.0)};
    }
    case 2: return latency::Exponential{uniform(rng, 0.1, 4.0)};
    default: return latency::Pareto{uniform(rng, 0.1, 2.0), uniform(rng, 1.1, 3.0)};
    }
}

inline TimestampPolicy timestamp_policy(Rng &rng) {
    switch (integer(rng, 0, 2)) {
    case 0: return policy::WallClockFloor{};
    case 1: return policy::ParentPlusBlocktime{};
    default: return policy::SkewedWallClock{integer(rng, -5, 5)};
    }
}

// A valid simulation config with J covering I.
inline SimConfig sim_config(Rng &rng) {
    SimConfig cfg;
    cfg.blocktime = integer(rng, 1, 10);
    cfg.recommit_interval = integer(rng, 0, 2) == 0 ? uniform(rng, 0.5, 6.0) : 0.0;
    cfg.latency = latency_model(rng);
    cfg.policy = timestamp_policy(rng);
    cfg.method = integer(rng, 0, 4) == 0 ? InjectionMethod::Parameter : InjectionMethod::BlockTimestamp;
    const auto a = integer(rng, 0, 40);
    const auto b = a + integer(rng, 0, 40);
    cfg.interval = ConstraintInterval(a, b);
    cfg.window = Window{static_cast<double>(integer(rng, 0, a)), static_cast<double>(b + integer(rng, 0, 20))};
    cfg.tx_rate = uniform(rng, 0.25, 3.0);
    return cfg;
}

// Classified records with arbitrary send and injected times around [0, 100].
inline std::vector<ClassifiedRecord> classified_list(Rng &rng, const ConstraintInterval &interval, std::size_t n) {
    std::vector<ClassifiedRecord> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TransactionRecord rec;
        rec.id = i;
        rec.sent_at = WorldTime(uniform(rng, 0.0, 100.0));
        // Integral injected times so bound hits happen often.
        rec.injected_at = static_cast<double>(integer(rng, 0, 100));
        rec.block_timestamp = BlockTimestamp(static_cast<std::int64_t>(rec.injected_at));
        rec.block_height = 1;
        out.push_back({rec, classify(rec.sent_at.seconds(), rec.injected_at, interval)});
    }
    return out;
}

} // namespace execacc::gen
