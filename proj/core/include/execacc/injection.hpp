#pragma once

#include "execacc/core_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace execacc {

enum class InjectionMethod : std::uint8_t { Parameter, BlockTimestamp };

std::string_view to_string(InjectionMethod method) noexcept;
// Accepts "parameter" and "block-timestamp".
InjectionMethod parse_injection_method(std::string_view name);

// How the producing miner stamps a new block. Every policy is forced to be
// strictly greater than the parent timestamp.
namespace policy {
struct WallClockFloor {
    friend constexpr bool operator==(WallClockFloor, WallClockFloor) = default;
};
struct ParentPlusBlocktime {
    friend constexpr bool operator==(ParentPlusBlocktime, ParentPlusBlocktime) = default;
};
// Miner clock running `offset` whole seconds ahead (negative: behind).
struct SkewedWallClock {
    std::int64_t offset = 0;
    friend constexpr bool operator==(SkewedWallClock, SkewedWallClock) = default;
};
} // namespace policy

using TimestampPolicy = std::variant<policy::WallClockFloor, policy::ParentPlusBlocktime, policy::SkewedWallClock>;

// "wall-clock-floor", "parent-plus-blocktime", "skewed-wall-clock"
std::string_view policy_name(const TimestampPolicy &policy) noexcept;
// Builds a policy from its config name; skew_offset is only used by skewed-wall-clock.
TimestampPolicy parse_timestamp_policy(std::string_view name, std::int64_t skew_offset = 0);

// Parameter method: the sender attaches its own world time.
constexpr double inject_parameter(WorldTime sent_at) noexcept { return sent_at.seconds(); }

// Throws ValidationError if blocktime < 1 or production_time is invalid.
BlockTimestamp assign_block_timestamp(const TimestampPolicy &policy, BlockTimestamp parent,
                                      WorldTime production_time, std::int64_t blocktime);

// The time a contract call sees. Throws ConfigError when the parameter method
// is selected without a parameter value.
double injected_time_of(const TransactionRecord &record, InjectionMethod method,
                        std::optional<double> param_value = std::nullopt);

} // namespace execacc
