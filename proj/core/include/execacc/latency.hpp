#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace execacc {

namespace latency {
struct Constant {
    double delay = 0.0;
    friend constexpr bool operator==(Constant, Constant) = default;
};
struct Uniform {
    double lo = 0.0;
    double hi = 0.0;
    friend constexpr bool operator==(Uniform, Uniform) = default;
};
struct Exponential {
    double mean = 1.0;
    friend constexpr bool operator==(Exponential, Exponential) = default;
};
// Type I Pareto: support [scale, inf), heavy tail for small shape.
struct Pareto {
    double scale = 1.0;
    double shape = 2.0;
    friend constexpr bool operator==(Pareto, Pareto) = default;
};
} // namespace latency

using LatencyModel = std::variant<latency::Constant, latency::Uniform, latency::Exponential, latency::Pareto>;

// Throws ValidationError if the parameters violate the model's constraints.
void validate(const LatencyModel &model);

// "constant", "uniform", "exponential", "pareto"
std::string_view latency_kind(const LatencyModel &model) noexcept;
std::vector<double> latency_params(const LatencyModel &model);
// Inverse of (latency_kind, latency_params); validates the result.
LatencyModel make_latency_model(std::string_view kind, std::span<const double> params);

// Upper bound on a sample, or +inf for unbounded models.
double max_delay(const LatencyModel &model) noexcept;

// Seeded, portable sampler. Uses mt19937_64 (fully specified by the standard)
// and explicit inverse-CDF transforms, so the sequence does not depend on the
// standard library's distribution implementations.
class LatencySampler {
public:
    LatencySampler(LatencyModel model, std::uint64_t stream_seed);

    // Non-negative, finite delay in seconds.
    double sample();

    const LatencyModel &model() const noexcept { return model_; }

private:
    // Uniform on [0, 1) with 53 random bits.
    double unit();

    LatencyModel model_;
    std::mt19937_64 engine_;
};

} // namespace execacc
