#pragma once

#include "execacc/experiment.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace execacc::io {

// Line-oriented key/value experiment config:
//
//   # comment
//   interval.a = 15
//   interval.b = 30
//   window.start = 0
//   window.end = 45
//   blocktime_s = 4
//   recommit_interval_s = 0
//   latency.kind = pareto          # constant | uniform | exponential | pareto
//   latency.params = 1, 1.5
//   policy = wall-clock-floor      # parent-plus-blocktime | skewed-wall-clock
//   skew_offset_s = 0
//   method = block-timestamp       # parameter
//   tx_rate = 1
//   rounds = 30
//   master_seed = 42
//   label = local-b4
//
// Keys absent from the text keep their value from `base`. Errors are thrown
// as ConfigError with a "<source>:<line>: " prefix.
ExperimentConfig parse_config(std::string_view text, const ExperimentConfig &base,
                              std::string_view source_name = "config");

ExperimentConfig load_config_file(const std::filesystem::path &path, const ExperimentConfig &base);

// Canonical text form, parseable by parse_config.
std::string render_config(const ExperimentConfig &config);

} // namespace execacc::io
