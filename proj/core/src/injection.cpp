#include "execacc/injection.hpp"

#include "execacc/errors.hpp"

#include <cmath>

namespace execacc {

std::string_view to_string(InjectionMethod method) noexcept {
    return method == InjectionMethod::Parameter ? "parameter" : "block-timestamp";
}

InjectionMethod parse_injection_method(std::string_view name) {
    if (name == "parameter") return InjectionMethod::Parameter;
    if (name == "block-timestamp") return InjectionMethod::BlockTimestamp;
    throw ValidationError("unknown injection method '" + std::string(name) +
                          "' (expected parameter or block-timestamp)");
}

std::string_view policy_name(const TimestampPolicy &policy) noexcept {
    struct Visitor {
        std::string_view operator()(policy::WallClockFloor) const { return "wall-clock-floor"; }
        std::string_view operator()(policy::ParentPlusBlocktime) const { return "parent-plus-blocktime"; }
        std::string_view operator()(policy::SkewedWallClock) const { return "skewed-wall-clock"; }
    };
    return std::visit(Visitor{}, policy);
}

TimestampPolicy parse_timestamp_policy(std::string_view name, std::int64_t skew_offset) {
    if (name == "wall-clock-floor") return policy::WallClockFloor{};
    if (name == "parent-plus-blocktime") return policy::ParentPlusBlocktime{};
    if (name == "skewed-wall-clock") return policy::SkewedWallClock{skew_offset};
    throw ValidationError("unknown timestamp policy '" + std::string(name) + "'");
}

namespace {

BlockTimestamp at_least_successor(std::int64_t candidate, BlockTimestamp parent) {
    if (candidate <= parent.seconds()) {
        return BlockTimestamp(parent.seconds() + 1);
    }
    return BlockTimestamp(candidate);
}

} // namespace

BlockTimestamp assign_block_timestamp(const TimestampPolicy &policy, BlockTimestamp parent, WorldTime production_time,
                                      std::int64_t blocktime) {
    if (blocktime < 1) {
        throw ValidationError("blocktime must be >= 1 second");
    }
    const auto wall = static_cast<std::int64_t>(std::floor(production_time.seconds()));
    struct Visitor {
        BlockTimestamp parent;
        std::int64_t wall;
        std::int64_t blocktime;

        BlockTimestamp operator()(policy::WallClockFloor) const { return at_least_successor(wall, parent); }
        BlockTimestamp operator()(policy::ParentPlusBlocktime) const {
            return BlockTimestamp(parent.seconds() + blocktime);
        }
        BlockTimestamp operator()(policy::SkewedWallClock skew) const {
            return at_least_successor(wall + skew.offset, parent);
        }
    };
    return std::visit(Visitor{parent, wall, blocktime}, policy);
}

double injected_time_of(const TransactionRecord &record, InjectionMethod method, std::optional<double> param_value) {
    if (method == InjectionMethod::Parameter) {
        if (!param_value) {
            throw ConfigError("parameter injection requires the attached world time");
        }
        return *param_value;
    }
    return static_cast<double>(record.block_timestamp.seconds());
}

} // namespace execacc
