#include "execacc/core_model.hpp"

#include "execacc/errors.hpp"

#include <cmath>
#include <string>

namespace execacc {

WorldTime::WorldTime(double seconds) : value_(seconds) {
    if (!std::isfinite(seconds) || seconds < 0.0) {
        throw ValidationError("world time must be finite and non-negative, got " + std::to_string(seconds));
    }
}

BlockTimestamp::BlockTimestamp(std::int64_t seconds) : value_(seconds) {
    if (seconds < 0) {
        throw ValidationError("block timestamp must be non-negative, got " + std::to_string(seconds));
    }
}

ConstraintInterval::ConstraintInterval(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
    if (a < 0 || b < 0) {
        throw ValidationError("constraint interval bounds must be non-negative");
    }
    if (a > b) {
        throw ValidationError("constraint interval requires a <= b, got [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
    }
}

std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
    case Outcome::TruePositive: return "TP";
    case Outcome::FalsePositive: return "FP";
    case Outcome::TrueNegative: return "TN";
    case Outcome::FalseNegative: return "FN";
    }
    return "??";
}

Outcome parse_outcome(std::string_view tag) {
    if (tag == "TP") return Outcome::TruePositive;
    if (tag == "FP") return Outcome::FalsePositive;
    if (tag == "TN") return Outcome::TrueNegative;
    if (tag == "FN") return Outcome::FalseNegative;
    throw ValidationError("unknown outcome tag '" + std::string(tag) + "'");
}

Classification classify(double world_time, double injected_time, const ConstraintInterval &interval) noexcept {
    const ContractState state{contains(interval, world_time), contains(interval, injected_time)};
    Outcome outcome;
    if (state.p) {
        outcome = state.p_hat ? Outcome::TruePositive : Outcome::FalseNegative;
    } else {
        outcome = state.p_hat ? Outcome::FalsePositive : Outcome::TrueNegative;
    }
    return {state, outcome};
}

} // namespace execacc
