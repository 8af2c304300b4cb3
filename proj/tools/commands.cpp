#include "commands.hpp"

#include "execacc/errors.hpp"
#include "execacc/io/config_file.hpp"
#include "execacc/io/reports.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace execacc::cli {

namespace fs = std::filesystem;

ExperimentConfig resolve_config(const Options &opts) {
    if (!opts.config && !opts.preset) {
        throw ValidationError("one of --config or --preset is required");
    }
    ExperimentConfig cfg = opts.preset ? preset(*opts.preset) : ExperimentConfig{};
    if (opts.config) cfg = io::load_config_file(*opts.config, cfg);
    if (opts.rounds) cfg.rounds = *opts.rounds;
    if (opts.seed) cfg.master_seed = *opts.seed;
    validate(cfg);
    return cfg;
}

std::vector<std::int64_t> parse_blocktime_list(const std::string &text) {
    std::vector<std::int64_t> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        std::int64_t v = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size() || v < 1) {
            throw ValidationError("--blocktimes expects a comma-separated list of integers >= 1, got '" + text + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (rest.empty()) throw ValidationError("--blocktimes has a trailing comma");
    }
    if (out.empty()) throw ValidationError("--blocktimes must list at least one blocktime");
    return out;
}

namespace {

template <typename WriteFn> void write_with(const fs::path &path, WriteFn fn) {
    std::ostringstream buf;
    fn(buf);
    io::write_text_file(path, buf.str());
}

std::string round_file_name(std::size_t round) {
    char name[32];
    std::snprintf(name, sizeof name, "round_%03zu.csv", round);
    return name;
}

ReportBundle write_bundle(const fs::path &dir, ExperimentResult result) {
    ReportBundle bundle;
    bundle.batch_csv_path = dir / "batches.csv";
    bundle.summary_path = dir / "summary.json";
    write_with(bundle.batch_csv_path, [&](std::ostream &o) { io::write_batch_csv(o, result.averaged); });
    for (std::size_t r = 0; r < result.rounds.size(); ++r) {
        const auto path = dir / "traces" / round_file_name(r);
        write_with(path, [&](std::ostream &o) { io::write_trace_csv(o, result.rounds[r].classified); });
        bundle.trace_csv_paths.push_back(path);
    }
    write_with(bundle.summary_path, [&](std::ostream &o) { io::write_summary(o, result); });
    bundle.result = std::move(result);
    return bundle;
}

} // namespace

void cmd_simulate(const Options &opts) {
    const ExperimentConfig cfg = resolve_config(opts);
    const SimTrace trace = run_simulation(cfg.sim, cfg.master_seed);
    const auto classified = classify_trace(trace, cfg.sim.interval);
    write_with(opts.out / "trace.csv", [&](std::ostream &o) { io::write_trace_csv(o, classified); });
    write_with(opts.out / "blocks.csv", [&](std::ostream &o) { io::write_blocks_csv(o, trace.blocks); });
}

ReportBundle cmd_experiment(const Options &opts) {
    const ExperimentConfig cfg = resolve_config(opts);
    return write_bundle(opts.out, run_experiment(cfg));
}

std::vector<ReportBundle> cmd_sweep(const Options &opts, const std::vector<std::int64_t> &blocktimes) {
    const ExperimentConfig cfg = resolve_config(opts);
    auto results = sweep_blocktime(cfg, blocktimes);

    std::vector<ReportBundle> bundles;
    std::vector<io::DipRow> rows;
    for (auto &result : results) {
        const auto b = result.config_echo.sim.blocktime;
        rows.push_back({b, dip_report(result.averaged, cfg.sim.interval), result.overall_accuracy});
        bundles.push_back(write_bundle(opts.out / ("b" + std::to_string(b)), std::move(result)));
    }
    write_with(opts.out / "dips.csv", [&](std::ostream &o) { io::write_dips_csv(o, rows); });
    return bundles;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Block-timestamp execution accuracy simulator"};
    app.require_subcommand(1);

    Options opts;
    std::string config_path;
    std::string preset_name;
    std::uint64_t seed = 0;
    std::uint32_t rounds = 0;
    std::string out_dir = ".";
    std::string blocktimes;

    auto add_common = [&](CLI::App *cmd, bool with_rounds) {
        cmd->add_option("--config", config_path, "Experiment config file (key = value)");
        cmd->add_option("--preset", preset_name, "Built-in preset: local or test");
        cmd->add_option("--seed", seed, "Seed (overrides master_seed)");
        if (with_rounds) cmd->add_option("--rounds", rounds, "Number of rounds")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_dir, "Output directory");
    };

    auto *simulate = app.add_subcommand("simulate", "Run one simulation and write trace.csv and blocks.csv");
    add_common(simulate, false);
    auto *experiment = app.add_subcommand("experiment", "Run a multi-round experiment and write a report bundle");
    add_common(experiment, true);
    auto *sweep = app.add_subcommand("sweep", "Run an experiment per blocktime and write dips.csv");
    add_common(sweep, true);
    sweep->add_option("--blocktimes", blocktimes, "Comma-separated blocktimes, e.g. 1,4,8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    auto *active = app.get_subcommands().front();
    if (active->count("--config")) opts.config = config_path;
    if (active->count("--preset")) opts.preset = preset_name;
    if (active->count("--seed")) opts.seed = seed;
    if (active->get_option_no_throw("--rounds") && active->count("--rounds")) opts.rounds = rounds;
    opts.out = out_dir;

    try {
        if (active == simulate) {
            cmd_simulate(opts);
            out << "wrote " << (opts.out / "trace.csv").string() << " and " << (opts.out / "blocks.csv").string()
                << '\n';
        } else if (active == experiment) {
            const auto bundle = cmd_experiment(opts);
            out << "overall_accuracy " << io::format_number(bundle.result.overall_accuracy) << '\n'
                << "wrote " << bundle.summary_path.string() << '\n';
        } else {
            const auto list = parse_blocktime_list(blocktimes);
            const auto bundles = cmd_sweep(opts, list);
            for (const auto &b : bundles) {
                out << "blocktime " << b.result.config_echo.sim.blocktime << " overall_accuracy "
                    << io::format_number(b.result.overall_accuracy) << '\n';
            }
            out << "wrote " << (opts.out / "dips.csv").string() << '\n';
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

} // namespace execacc::cli
