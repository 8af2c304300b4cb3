#include "execacc/latency.hpp"

#include "execacc/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace execacc {

namespace {

bool finite_non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

struct Validator {
    void operator()(const latency::Constant &m) const {
        if (!finite_non_negative(m.delay)) throw ValidationError("constant latency must be finite and >= 0");
    }
    void operator()(const latency::Uniform &m) const {
        if (!finite_non_negative(m.lo) || !finite_non_negative(m.hi) || m.lo > m.hi) {
            throw ValidationError("uniform latency requires finite 0 <= lo <= hi");
        }
    }
    void operator()(const latency::Exponential &m) const {
        if (!std::isfinite(m.mean) || m.mean <= 0.0) throw ValidationError("exponential latency mean must be > 0");
    }
    void operator()(const latency::Pareto &m) const {
        if (!std::isfinite(m.scale) || m.scale <= 0.0) throw ValidationError("pareto latency scale must be > 0");
        if (!std::isfinite(m.shape) || m.shape <= 1.0) throw ValidationError("pareto latency shape must be > 1");
    }
};

} // namespace

void validate(const LatencyModel &model) { std::visit(Validator{}, model); }

std::string_view latency_kind(const LatencyModel &model) noexcept {
    struct Visitor {
        std::string_view operator()(const latency::Constant &) const { return "constant"; }
        std::string_view operator()(const latency::Uniform &) const { return "uniform"; }
        std::string_view operator()(const latency::Exponential &) const { return "exponential"; }
        std::string_view operator()(const latency::Pareto &) const { return "pareto"; }
    };
    return std::visit(Visitor{}, model);
}

std::vector<double> latency_params(const LatencyModel &model) {
    struct Visitor {
        std::vector<double> operator()(const latency::Constant &m) const { return {m.delay}; }
        std::vector<double> operator()(const latency::Uniform &m) const { return {m.lo, m.hi}; }
        std::vector<double> operator()(const latency::Exponential &m) const { return {m.mean}; }
        std::vector<double> operator()(const latency::Pareto &m) const { return {m.scale, m.shape}; }
    };
    return std::visit(Visitor{}, model);
}

LatencyModel make_latency_model(std::string_view kind, std::span<const double> params) {
    auto expect = [&](std::size_t n) {
        if (params.size() != n) {
            throw ValidationError("latency kind '" + std::string(kind) + "' takes " + std::to_string(n) +
                                  " parameter(s), got " + std::to_string(params.size()));
        }
    };
    LatencyModel model;
    if (kind == "constant") {
        expect(1);
        model = latency::Constant{params[0]};
    } else if (kind == "uniform") {
        expect(2);
        model = latency::Uniform{params[0], params[1]};
    } else if (kind == "exponential") {
        expect(1);
        model = latency::Exponential{params[0]};
    } else if (kind == "pareto") {
        expect(2);
        model = latency::Pareto{params[0], params[1]};
    } else {
        throw ValidationError("unknown latency kind '" + std::string(kind) + "'");
    }
    validate(model);
    return model;
}

double max_delay(const LatencyModel &model) noexcept {
    if (const auto *c = std::get_if<latency::Constant>(&model)) return c->delay;
    if (const auto *u = std::get_if<latency::Uniform>(&model)) return u->hi;
    return std::numeric_limits<double>::infinity();
}

LatencySampler::LatencySampler(LatencyModel model, std::uint64_t stream_seed)
    : model_(std::move(model)), engine_(stream_seed) {
    validate(model_);
}

double LatencySampler::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double LatencySampler::sample() {
    struct Visitor {
        LatencySampler &self;
        double operator()(const latency::Constant &m) const { return m.delay; }
        double operator()(const latency::Uniform &m) const { return m.lo + (m.hi - m.lo) * self.unit(); }
        double operator()(const latency::Exponential &m) const { return -m.mean * std::log1p(-self.unit()); }
        double operator()(const latency::Pareto &m) const {
            // 1 - u lies in (0, 1], so the result is finite and >= scale.
            return m.scale * std::pow(1.0 - self.unit(), -1.0 / m.shape);
        }
    };
    const double delay = std::visit(Visitor{*this}, model_);
    if (!std::isfinite(delay) || delay < 0.0) {
        throw Error("latency sampler produced an invalid delay");
    }
    return delay;
}

} // namespace execacc
