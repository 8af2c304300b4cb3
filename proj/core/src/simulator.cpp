#include "execacc/simulator.hpp"

#include "execacc/errors.hpp"
#include "execacc/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace execacc {

void validate(const SimConfig &config, bool require_window_covers_interval) {
    if (config.blocktime < 1) {
        throw ValidationError("blocktime_s must be >= 1");
    }
    if (!std::isfinite(config.recommit_interval) || config.recommit_interval < 0.0) {
        throw ValidationError("recommit_interval_s must be finite and >= 0");
    }
    validate(config.latency);
    if (!std::isfinite(config.window.start) || !std::isfinite(config.window.end) || config.window.start < 0.0) {
        throw ValidationError("window bounds must be finite and >= 0");
    }
    if (config.window.start > config.window.end) {
        throw ValidationError("window requires start <= end");
    }
    if (!std::isfinite(config.tx_rate) || config.tx_rate <= 0.0) {
        throw ValidationError("tx_rate must be > 0");
    }
    if (require_window_covers_interval && !config.window.covers(config.interval)) {
        throw ValidationError("experiment window must contain the constraint interval");
    }
}

std::vector<WorldTime> schedule_transactions(const Window &window, double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw ValidationError("transaction rate must be > 0");
    }
    if (window.start > window.end) {
        throw ValidationError("window requires start <= end");
    }
    std::vector<WorldTime> sends;
    for (std::uint64_t k = 0;; ++k) {
        const double t = window.start + static_cast<double>(k) / rate;
        if (!(t < window.end)) break;
        sends.emplace_back(t);
    }
    return sends;
}

namespace {

// Events sharing a timestamp run in this order. Block production comes first,
// which is what makes the inclusion cutoff strict.
enum class EventKind : std::uint8_t { BlockProduction, Send, Arrival, Eligible };

struct Event {
    double time;
    EventKind kind;
    std::uint64_t seq;
    std::uint64_t subject; // transaction id, or block index for productions
};

struct Later {
    bool operator()(const Event &x, const Event &y) const {
        if (x.time != y.time) return x.time > y.time;
        if (x.kind != y.kind) return x.kind > y.kind;
        return x.seq > y.seq;
    }
};

double recommit_slot(double arrival, double interval) {
    if (interval <= 0.0) return arrival;
    double slot = std::ceil(arrival / interval) * interval;
    if (slot < arrival) slot += interval;
    return slot;
}

class EventLoop {
public:
    EventLoop(const SimConfig &config, std::span<const WorldTime> sends, std::uint64_t seed)
        : config_(config), sampler_(config.latency, seeds::stream(seed, "latency")) {
        trace_.config_echo = config;
        trace_.seed = seed;
        trace_.records.resize(sends.size());
        arrival_.resize(sends.size());
        for (std::uint64_t id = 0; id < sends.size(); ++id) {
            auto &rec = trace_.records[id];
            rec.id = id;
            rec.sent_at = sends[id];
            push(sends[id].seconds(), EventKind::Send, id);
        }
        push(static_cast<double>(config.blocktime), EventKind::BlockProduction, 1);
    }

    SimTrace run() {
        while (!queue_.empty()) {
            const Event ev = queue_.top();
            queue_.pop();
            switch (ev.kind) {
            case EventKind::Send: on_send(ev); break;
            case EventKind::Arrival: on_arrival(ev); break;
            case EventKind::Eligible: mempool_.push_back(ev.subject); break;
            case EventKind::BlockProduction: on_block(ev); break;
            }
        }
        return std::move(trace_);
    }

private:
    void push(double time, EventKind kind, std::uint64_t subject) {
        queue_.push(Event{time, kind, next_seq_++, subject});
    }

    void on_send(const Event &ev) {
        const double delay = sampler_.sample();
        push(ev.time + delay, EventKind::Arrival, ev.subject);
    }

    void on_arrival(const Event &ev) {
        arrival_[ev.subject] = ev.time;
        const double eligible = recommit_slot(ev.time, config_.recommit_interval);
        trace_.records[ev.subject].eligible_at = eligible;
        push(eligible, EventKind::Eligible, ev.subject);
    }

    void on_block(const Event &ev) {
        const std::uint64_t height = ev.subject;
        const WorldTime production(ev.time);
        const BlockTimestamp timestamp =
            assign_block_timestamp(config_.policy, parent_, production, config_.blocktime);

        std::sort(mempool_.begin(), mempool_.end(), [this](std::uint64_t x, std::uint64_t y) {
            if (arrival_[x] != arrival_[y]) return arrival_[x] < arrival_[y];
            return x < y;
        });
        for (const std::uint64_t id : mempool_) {
            auto &rec = trace_.records[id];
            rec.block_height = height;
            rec.block_timestamp = timestamp;
            rec.injected_at = config_.method == InjectionMethod::BlockTimestamp
                                  ? static_cast<double>(timestamp.seconds())
                                  : inject_parameter(rec.sent_at);
        }
        included_ += mempool_.size();
        mempool_.clear();

        trace_.blocks.push_back(Block{height, timestamp, production});
        parent_ = timestamp;

        const double next = static_cast<double>(height + 1) * static_cast<double>(config_.blocktime);
        if (included_ < trace_.records.size() || next <= config_.window.end) {
            push(next, EventKind::BlockProduction, height + 1);
        }
    }

    const SimConfig &config_;
    LatencySampler sampler_;
    SimTrace trace_;
    std::vector<double> arrival_;
    std::vector<std::uint64_t> mempool_;
    std::priority_queue<Event, std::vector<Event>, Later> queue_;
    std::uint64_t next_seq_ = 0;
    std::size_t included_ = 0;
    BlockTimestamp parent_{0}; // genesis
};

} // namespace

SimTrace simulate(const SimConfig &config, std::span<const WorldTime> send_times, std::uint64_t seed) {
    validate(config, false);
    if (!std::is_sorted(send_times.begin(), send_times.end())) {
        throw ValidationError("send times must be ascending");
    }
    return EventLoop(config, send_times, seed).run();
}

SimTrace run_simulation(const SimConfig &config, std::uint64_t seed) {
    validate(config, true);
    const auto sends = schedule_transactions(config.window, config.tx_rate);
    return simulate(config, sends, seed);
}

std::vector<ClassifiedRecord> classify_trace(const SimTrace &trace, const ConstraintInterval &interval) {
    std::vector<ClassifiedRecord> out;
    out.reserve(trace.records.size());
    for (const auto &rec : trace.records) {
        if (!rec.included()) {
            throw IncompleteTraceError("transaction " + std::to_string(rec.id) + " was never included in a block");
        }
        out.push_back({rec, classify(rec.sent_at.seconds(), rec.injected_at, interval)});
    }
    return out;
}

} // namespace execacc
