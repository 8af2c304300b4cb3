#include "execacc/io/config_file.hpp"

#include "execacc/errors.hpp"
#include "execacc/io/reports.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>

namespace execacc::io {

namespace {

constexpr std::string_view kKeys[] = {
    "interval.a", "interval.b", "window.start", "window.end",  "blocktime_s", "recommit_interval_s",
    "latency.kind", "latency.params", "policy", "skew_offset_s", "method",     "tx_rate",
    "rounds",       "master_seed",    "label",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    std::size_t line = 0;
};

class Parser {
public:
    Parser(std::string_view text, std::string_view source) : source_(source) {
        std::size_t line_no = 0;
        std::size_t from = 0;
        while (from <= text.size()) {
            const auto nl = text.find('\n', from);
            const auto raw = text.substr(from, nl == std::string_view::npos ? std::string_view::npos : nl - from);
            ++line_no;
            read_line(raw, line_no);
            if (nl == std::string_view::npos) break;
            from = nl + 1;
        }
    }

    ExperimentConfig apply(const ExperimentConfig &base) const {
        ExperimentConfig cfg = base;
        auto &sim = cfg.sim;

        if (has("interval.a") || has("interval.b")) {
            const auto a = integer<std::int64_t>("interval.a").value_or(base.sim.interval.lower());
            const auto b = integer<std::int64_t>("interval.b").value_or(base.sim.interval.upper());
            anchored(last_line({"interval.a", "interval.b"}), [&] { sim.interval = ConstraintInterval(a, b); });
        }
        if (auto v = number("window.start")) sim.window.start = *v;
        if (auto v = number("window.end")) sim.window.end = *v;
        if (auto v = integer<std::int64_t>("blocktime_s")) sim.blocktime = *v;
        if (auto v = number("recommit_interval_s")) sim.recommit_interval = *v;
        if (auto v = number("tx_rate")) sim.tx_rate = *v;

        if (has("latency.kind") || has("latency.params")) {
            const std::string kind = has("latency.kind") ? get("latency.kind").value
                                                         : std::string(latency_kind(base.sim.latency));
            if (!has("latency.params") && kind != latency_kind(base.sim.latency)) {
                fail(get("latency.kind").line, "latency.params is required when latency.kind changes");
            }
            const auto params = has("latency.params") ? number_list("latency.params") : latency_params(base.sim.latency);
            anchored(last_line({"latency.kind", "latency.params"}),
                     [&] { sim.latency = make_latency_model(kind, params); });
        }

        if (has("policy") || has("skew_offset_s")) {
            const std::string name = has("policy") ? get("policy").value : std::string(policy_name(base.sim.policy));
            std::int64_t offset = 0;
            if (const auto *skew = std::get_if<policy::SkewedWallClock>(&base.sim.policy)) offset = skew->offset;
            if (auto v = integer<std::int64_t>("skew_offset_s")) offset = *v;
            anchored(last_line({"policy", "skew_offset_s"}),
                     [&] { sim.policy = parse_timestamp_policy(name, offset); });
        }
        if (has("method")) {
            anchored(get("method").line, [&] { sim.method = parse_injection_method(get("method").value); });
        }
        if (auto v = integer<std::uint32_t>("rounds")) cfg.rounds = *v;
        if (auto v = integer<std::uint64_t>("master_seed")) cfg.master_seed = *v;
        if (has("label")) cfg.label = get("label").value;

        check("blocktime_s", sim.blocktime >= 1, "blocktime_s must be >= 1");
        check("recommit_interval_s", sim.recommit_interval >= 0.0, "recommit_interval_s must be >= 0");
        check("tx_rate", sim.tx_rate > 0.0, "tx_rate must be > 0");
        check("rounds", cfg.rounds >= 1, "rounds must be >= 1");
        check("window.end", sim.window.start <= sim.window.end, "window requires start <= end");
        check("window.start", sim.window.start >= 0.0, "window.start must be >= 0");

        anchored(last_line({"interval.a", "interval.b", "window.start", "window.end"}), [&] { validate(cfg); });
        return cfg;
    }

private:
    void read_line(std::string_view raw, std::size_t line_no) {
        const auto hash = raw.find('#');
        const auto line = trim(raw.substr(0, hash));
        if (line.empty()) return;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
            fail(line_no, "unknown key '" + key + "'");
        }
        if (value.empty()) fail(line_no, "missing value for '" + key + "'");
        if (entries_.contains(key)) {
            fail(line_no, "duplicate key '" + key + "' (first set on line " + std::to_string(entries_[key].line) + ")");
        }
        entries_[key] = Entry{value, line_no};
    }

    bool has(const std::string &key) const { return entries_.contains(key); }
    const Entry &get(const std::string &key) const { return entries_.at(key); }

    std::size_t last_line(std::initializer_list<const char *> keys) const {
        std::size_t line = 0;
        for (const char *k : keys) {
            if (auto it = entries_.find(k); it != entries_.end()) line = std::max(line, it->second.line);
        }
        return line;
    }

    [[noreturn]] void fail(std::size_t line, const std::string &message) const {
        std::string prefix(source_);
        if (line > 0) prefix += ":" + std::to_string(line);
        throw ConfigError(prefix + ": " + message);
    }

    template <typename Fn> void anchored(std::size_t line, Fn fn) const {
        try {
            fn();
        } catch (const ConfigError &) {
            throw;
        } catch (const ValidationError &e) {
            fail(line, e.what());
        }
    }

    void check(const std::string &key, bool ok, const std::string &message) const {
        if (!ok) fail(has(key) ? get(key).line : 0, message);
    }

    std::optional<double> number(const std::string &key) const {
        if (!has(key)) return std::nullopt;
        const auto &e = get(key);
        double v = 0.0;
        anchored(e.line, [&] { v = parse_number(e.value); });
        return v;
    }

    template <typename Int> std::optional<Int> integer(const std::string &key) const {
        if (!has(key)) return std::nullopt;
        const auto &e = get(key);
        Int v{};
        const auto *end = e.value.data() + e.value.size();
        const auto res = std::from_chars(e.value.data(), end, v);
        if (res.ec != std::errc{} || res.ptr != end) fail(e.line, "'" + key + "' expects an integer, got '" + e.value + "'");
        return v;
    }

    std::vector<double> number_list(const std::string &key) const {
        const auto &e = get(key);
        std::vector<double> out;
        std::string_view rest = e.value;
        for (;;) {
            const auto comma = rest.find(',');
            const auto item = trim(rest.substr(0, comma));
            anchored(e.line, [&] { out.push_back(parse_number(item)); });
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return out;
    }

    std::string source_;
    std::map<std::string, Entry> entries_;
};

} // namespace

ExperimentConfig parse_config(std::string_view text, const ExperimentConfig &base, std::string_view source_name) {
    return Parser(text, source_name).apply(base);
}

ExperimentConfig load_config_file(const std::filesystem::path &path, const ExperimentConfig &base) {
    return parse_config(read_text_file(path), base, path.string());
}

std::string render_config(const ExperimentConfig &config) {
    const auto &sim = config.sim;
    std::ostringstream out;
    out << "interval.a = " << sim.interval.lower() << '\n';
    out << "interval.b = " << sim.interval.upper() << '\n';
    out << "window.start = " << format_number(sim.window.start) << '\n';
    out << "window.end = " << format_number(sim.window.end) << '\n';
    out << "blocktime_s = " << sim.blocktime << '\n';
    out << "recommit_interval_s = " << format_number(sim.recommit_interval) << '\n';
    out << "latency.kind = " << latency_kind(sim.latency) << '\n';
    out << "latency.params = ";
    const auto params = latency_params(sim.latency);
    for (std::size_t i = 0; i < params.size(); ++i) out << (i ? ", " : "") << format_number(params[i]);
    out << '\n';
    out << "policy = " << policy_name(sim.policy) << '\n';
    if (const auto *skew = std::get_if<policy::SkewedWallClock>(&sim.policy)) {
        out << "skew_offset_s = " << skew->offset << '\n';
    }
    out << "method = " << to_string(sim.method) << '\n';
    out << "tx_rate = " << format_number(sim.tx_rate) << '\n';
    out << "rounds = " << config.rounds << '\n';
    out << "master_seed = " << config.master_seed << '\n';
    if (!config.label.empty()) out << "label = " << config.label << '\n';
    return out.str();
}

} // namespace execacc::io
