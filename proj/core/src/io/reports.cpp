#include "execacc/io/reports.hpp"

#include "execacc/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>

namespace execacc::io {

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw ValidationError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

namespace {

template <typename Int> Int parse_integer(std::string_view text) {
    Int value{};
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw ValidationError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bit(std::string_view text) {
    if (text == "0") return false;
    if (text == "1") return true;
    throw ValidationError("expected 0 or 1, got '" + std::string(text) + "'");
}

std::vector<std::string_view> split_row(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t from = 0;
    for (;;) {
        const auto comma = line.find(',', from);
        fields.push_back(line.substr(from, comma == std::string_view::npos ? std::string_view::npos : comma - from));
        if (comma == std::string_view::npos) break;
        from = comma + 1;
    }
    return fields;
}

// Calls row(fields, line_no) for every data row after checking the header.
template <typename RowFn> void read_csv(std::istream &in, std::string_view header, std::size_t columns, RowFn row) {
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw ValidationError("expected CSV header '" + std::string(header) + "'");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_row(line);
        if (fields.size() != columns) {
            throw ValidationError("CSV line " + std::to_string(line_no) + ": expected " + std::to_string(columns) +
                                  " fields, got " + std::to_string(fields.size()));
        }
        row(fields, line_no);
    }
}

constexpr std::string_view kTraceHeader = "id,sent_at_s,injected_at_s,block_height,p,p_hat,outcome";
constexpr std::string_view kBlocksHeader = "height,timestamp_s,production_time_s";
constexpr std::string_view kBatchHeader = "batch_start_s,count,freq_tp,freq_fp,freq_tn,freq_fn,accuracy";
constexpr std::string_view kDipsHeader = "blocktime_s,pre_lower_width_s,in_upper_width_s,post_upper_width_s,overall_accuracy";

} // namespace

void write_trace_csv(std::ostream &out, std::span<const ClassifiedRecord> classified) {
    out << kTraceHeader << '\n';
    for (const auto &c : classified) {
        const auto &r = c.record;
        out << r.id << ',' << format_number(r.sent_at.seconds()) << ',' << format_number(r.injected_at) << ','
            << r.block_height << ',' << int{c.classification.state.p} << ',' << int{c.classification.state.p_hat}
            << ',' << to_string(c.classification.outcome) << '\n';
    }
}

void write_blocks_csv(std::ostream &out, std::span<const Block> blocks) {
    out << kBlocksHeader << '\n';
    for (const auto &b : blocks) {
        out << b.height << ',' << b.timestamp.seconds() << ',' << format_number(b.production_time.seconds()) << '\n';
    }
}

void write_batch_csv(std::ostream &out, const BatchTable &table) {
    out << kBatchHeader << '\n';
    for (const auto &b : table.batches) {
        out << format_number(b.batch_start) << ',' << b.count;
        if (b.freq) {
            out << ',' << format_number(b.freq->tp) << ',' << format_number(b.freq->fp) << ','
                << format_number(b.freq->tn) << ',' << format_number(b.freq->fn) << ','
                << format_number(b.freq->accuracy);
        } else {
            out << ",,,,,";
        }
        out << '\n';
    }
}

void write_summary(std::ostream &out, const ExperimentResult &result) {
    using nlohmann::ordered_json;
    const auto &cfg = result.config_echo;

    ordered_json config;
    config["interval.a"] = cfg.sim.interval.lower();
    config["interval.b"] = cfg.sim.interval.upper();
    config["window.start"] = cfg.sim.window.start;
    config["window.end"] = cfg.sim.window.end;
    config["blocktime_s"] = cfg.sim.blocktime;
    config["recommit_interval_s"] = cfg.sim.recommit_interval;
    config["latency.kind"] = latency_kind(cfg.sim.latency);
    config["latency.params"] = latency_params(cfg.sim.latency);
    config["policy"] = policy_name(cfg.sim.policy);
    if (const auto *skew = std::get_if<policy::SkewedWallClock>(&cfg.sim.policy)) {
        config["skew_offset_s"] = skew->offset;
    }
    config["method"] = to_string(cfg.sim.method);
    config["tx_rate"] = cfg.sim.tx_rate;
    config["rounds"] = cfg.rounds;
    config["master_seed"] = cfg.master_seed;
    config["label"] = cfg.label;

    ordered_json doc;
    doc["label"] = cfg.label;
    doc["overall_accuracy"] = result.overall_accuracy;
    doc["per_round_accuracy"] = result.per_round_accuracy;
    doc["counts"] = ordered_json{{"tp", result.pooled_counts.tp},
                                 {"fp", result.pooled_counts.fp},
                                 {"tn", result.pooled_counts.tn},
                                 {"fn", result.pooled_counts.fn},
                                 {"n", result.pooled_counts.n()}};
    doc["offsets"] = ordered_json{{"mean", result.offsets.mean}, {"max", result.offsets.max},
                                  {"min", result.offsets.min},   {"p50", result.offsets.p50},
                                  {"p95", result.offsets.p95},   {"n", result.offsets.n}};
    doc["config"] = std::move(config);
    out << doc.dump(2) << '\n';
}

void write_dips_csv(std::ostream &out, std::span<const DipRow> rows) {
    out << kDipsHeader << '\n';
    for (const auto &r : rows) {
        out << r.blocktime << ',' << r.dips.pre_lower_width << ',' << r.dips.in_interval_upper_width << ','
            << r.dips.post_upper_width << ',' << format_number(r.overall_accuracy) << '\n';
    }
}

std::vector<TraceRow> read_trace_csv(std::istream &in) {
    std::vector<TraceRow> rows;
    read_csv(in, kTraceHeader, 7, [&](const auto &f, std::size_t) {
        TraceRow row;
        row.id = parse_integer<std::uint64_t>(f[0]);
        row.sent_at = parse_number(f[1]);
        row.injected_at = parse_number(f[2]);
        row.block_height = parse_integer<std::uint64_t>(f[3]);
        row.state = ContractState{parse_bit(f[4]), parse_bit(f[5])};
        row.outcome = parse_outcome(f[6]);
        rows.push_back(row);
    });
    return rows;
}

std::vector<Block> read_blocks_csv(std::istream &in) {
    std::vector<Block> blocks;
    read_csv(in, kBlocksHeader, 3, [&](const auto &f, std::size_t) {
        blocks.push_back(Block{parse_integer<std::uint64_t>(f[0]), BlockTimestamp(parse_integer<std::int64_t>(f[1])),
                               WorldTime(parse_number(f[2]))});
    });
    return blocks;
}

std::vector<Batch> read_batch_csv(std::istream &in) {
    std::vector<Batch> batches;
    read_csv(in, kBatchHeader, 7, [&](const auto &f, std::size_t line_no) {
        Batch b;
        b.batch_start = parse_number(f[0]);
        b.count = parse_integer<std::uint64_t>(f[1]);
        const bool blank = f[2].empty() && f[3].empty() && f[4].empty() && f[5].empty() && f[6].empty();
        if (!blank) {
            b.freq = BatchFrequencies{parse_number(f[2]), parse_number(f[3]), parse_number(f[4]), parse_number(f[5]),
                                      parse_number(f[6])};
        } else if (b.count != 0) {
            throw ValidationError("CSV line " + std::to_string(line_no) + ": non-empty batch without frequencies");
        }
        batches.push_back(b);
    });
    return batches;
}

std::vector<DipRow> read_dips_csv(std::istream &in) {
    std::vector<DipRow> rows;
    read_csv(in, kDipsHeader, 5, [&](const auto &f, std::size_t) {
        DipRow r;
        r.blocktime = parse_integer<std::int64_t>(f[0]);
        r.dips.pre_lower_width = parse_integer<std::int64_t>(f[1]);
        r.dips.in_interval_upper_width = parse_integer<std::int64_t>(f[2]);
        r.dips.post_upper_width = parse_integer<std::int64_t>(f[3]);
        r.overall_accuracy = parse_number(f[4]);
        rows.push_back(r);
    });
    return rows;
}

void write_text_file(const std::filesystem::path &path, std::string_view content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace execacc::io
