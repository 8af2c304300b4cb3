#pragma once

#include <cstdint>
#include <string_view>

namespace execacc {

// World time in seconds since the experiment epoch (experiment start = 0).
class WorldTime {
public:
    constexpr WorldTime() = default;
    // Throws ValidationError unless seconds is finite and >= 0.
    explicit WorldTime(double seconds);

    constexpr double seconds() const noexcept { return value_; }

    friend constexpr auto operator<=>(WorldTime, WorldTime) = default;

private:
    double value_ = 0.0;
};

// Whole-second block timestamp since the experiment epoch.
class BlockTimestamp {
public:
    constexpr BlockTimestamp() = default;
    // Throws ValidationError if seconds < 0.
    explicit BlockTimestamp(std::int64_t seconds);

    constexpr std::int64_t seconds() const noexcept { return value_; }

    friend constexpr auto operator<=>(BlockTimestamp, BlockTimestamp) = default;

private:
    std::int64_t value_ = 0;
};

// Closed interval [a, b] of whole seconds the contract's positive branch applies to.
class ConstraintInterval {
public:
    // Throws ValidationError unless 0 <= a <= b.
    ConstraintInterval(std::int64_t a, std::int64_t b);

    constexpr std::int64_t lower() const noexcept { return a_; }
    constexpr std::int64_t upper() const noexcept { return b_; }

    friend constexpr bool operator==(const ConstraintInterval &, const ConstraintInterval &) = default;

private:
    std::int64_t a_;
    std::int64_t b_;
};

enum class Outcome : std::uint8_t { TruePositive, FalsePositive, TrueNegative, FalseNegative };

// "TP", "FP", "TN", "FN"
std::string_view to_string(Outcome outcome) noexcept;
// Inverse of to_string; throws ValidationError on anything else.
Outcome parse_outcome(std::string_view tag);

constexpr bool is_correct(Outcome o) noexcept {
    return o == Outcome::TruePositive || o == Outcome::TrueNegative;
}

// p is the true condition (world time in I), p_hat the predicted one (injected time in I).
struct ContractState {
    bool p = false;
    bool p_hat = false;

    friend constexpr bool operator==(ContractState, ContractState) = default;
};

struct Classification {
    ContractState state;
    Outcome outcome = Outcome::TrueNegative;

    friend constexpr bool operator==(Classification, Classification) = default;
};

struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t tn = 0;
    std::uint64_t fn = 0;

    constexpr std::uint64_t n() const noexcept { return tp + fp + tn + fn; }
    constexpr std::uint64_t correct() const noexcept { return tp + tn; }

    friend constexpr bool operator==(const ConfusionCounts &, const ConfusionCounts &) = default;
};

struct TransactionRecord {
    std::uint64_t id = 0;
    WorldTime sent_at;
    // Time the contract executes against: the block timestamp under the block
    // timestamp method, the attached world time under the parameter method.
    double injected_at = 0.0;
    // Timestamp of the including block, independent of the injection method.
    BlockTimestamp block_timestamp;
    // 0 means "not yet included"; included records have height >= 1.
    std::uint64_t block_height = 0;
    // Instant the node may first hand the transaction to a block (arrival,
    // rounded up to the recommit grid).
    double eligible_at = 0.0;

    bool included() const noexcept { return block_height >= 1; }
};

// a <= t <= b.
constexpr bool contains(const ConstraintInterval &interval, double t) noexcept {
    return static_cast<double>(interval.lower()) <= t && t <= static_cast<double>(interval.upper());
}

Classification classify(double world_time, double injected_time, const ConstraintInterval &interval) noexcept;

inline Classification classify(WorldTime world_time, BlockTimestamp injected,
                               const ConstraintInterval &interval) noexcept {
    return classify(world_time.seconds(), static_cast<double>(injected.seconds()), interval);
}

constexpr ConfusionCounts accumulate(ConfusionCounts counts, Outcome outcome) noexcept {
    switch (outcome) {
    case Outcome::TruePositive: ++counts.tp; break;
    case Outcome::FalsePositive: ++counts.fp; break;
    case Outcome::TrueNegative: ++counts.tn; break;
    case Outcome::FalseNegative: ++counts.fn; break;
    }
    return counts;
}

} // namespace execacc
