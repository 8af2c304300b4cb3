#pragma once

#include "execacc/experiment.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace execacc::io {

// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);
double parse_number(std::string_view text);

// id,sent_at_s,injected_at_s,block_height,p,p_hat,outcome
void write_trace_csv(std::ostream &out, std::span<const ClassifiedRecord> classified);
// height,timestamp_s,production_time_s
void write_blocks_csv(std::ostream &out, std::span<const Block> blocks);
// batch_start_s,count,freq_tp,freq_fp,freq_tn,freq_fn,accuracy (empty batches leave freq fields blank)
void write_batch_csv(std::ostream &out, const BatchTable &table);
// JSON document with a fixed key order.
void write_summary(std::ostream &out, const ExperimentResult &result);

struct DipRow {
    std::int64_t blocktime = 0;
    DipReport dips;
    double overall_accuracy = 0.0;
};
// blocktime_s,pre_lower_width_s,in_upper_width_s,post_upper_width_s,overall_accuracy
void write_dips_csv(std::ostream &out, std::span<const DipRow> rows);

struct TraceRow {
    std::uint64_t id = 0;
    double sent_at = 0.0;
    double injected_at = 0.0;
    std::uint64_t block_height = 0;
    ContractState state;
    Outcome outcome = Outcome::TrueNegative;

    friend bool operator==(const TraceRow &, const TraceRow &) = default;
};

// Parsers for the formats above; throw ValidationError on malformed input.
std::vector<TraceRow> read_trace_csv(std::istream &in);
std::vector<Block> read_blocks_csv(std::istream &in);
std::vector<Batch> read_batch_csv(std::istream &in);
std::vector<DipRow> read_dips_csv(std::istream &in);

// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path &path, std::string_view content);
// Throws IoError.
std::string read_text_file(const std::filesystem::path &path);

} // namespace execacc::io
