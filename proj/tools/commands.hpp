#pragma once

#include "execacc/experiment.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace execacc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2 };

struct Options {
    std::optional<std::filesystem::path> config;
    std::optional<std::string> preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> rounds;
    std::filesystem::path out = ".";
};

struct ReportBundle {
    std::filesystem::path batch_csv_path;
    std::vector<std::filesystem::path> trace_csv_paths; // one per round
    std::filesystem::path summary_path;
    ExperimentResult result;
};

// Preset (if any) overlaid with the config file (if any), then --rounds and
// --seed. Throws ValidationError when neither source is given.
ExperimentConfig resolve_config(const Options &opts);

// "1,4,8" -> {1, 4, 8}; throws ValidationError on an empty or malformed list.
std::vector<std::int64_t> parse_blocktime_list(const std::string &text);

// Writes trace.csv and blocks.csv; the seed is --seed, else master_seed.
void cmd_simulate(const Options &opts);
ReportBundle cmd_experiment(const Options &opts);
// One bundle per blocktime under out/b<N>/, plus out/dips.csv.
std::vector<ReportBundle> cmd_sweep(const Options &opts, const std::vector<std::int64_t> &blocktimes);

// Full command-line entry point. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace execacc::cli
