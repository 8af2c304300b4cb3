#include "execacc/errors.hpp"
#include "execacc/experiment.hpp"
#include "execacc/seeds.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace execacc;

namespace {

ExperimentConfig deterministic_local(std::int64_t blocktime) {
    auto cfg = preset("local");
    cfg.rounds = 1;
    cfg.sim.blocktime = blocktime;
    return cfg;
}

void expect_same(const ExperimentResult &x, const ExperimentResult &y) {
    EXPECT_EQ(x.overall_accuracy, y.overall_accuracy);
    EXPECT_EQ(x.per_round_accuracy, y.per_round_accuracy);
    EXPECT_EQ(x.pooled_counts, y.pooled_counts);
    ASSERT_EQ(x.averaged.batches.size(), y.averaged.batches.size());
    for (std::size_t i = 0; i < x.averaged.batches.size(); ++i) {
        const auto &bx = x.averaged.batches[i];
        const auto &by = y.averaged.batches[i];
        EXPECT_EQ(bx.count, by.count);
        ASSERT_EQ(bx.freq.has_value(), by.freq.has_value());
        if (bx.freq) {
            EXPECT_EQ(bx.freq->tp, by.freq->tp);
            EXPECT_EQ(bx.freq->fp, by.freq->fp);
            EXPECT_EQ(bx.freq->tn, by.freq->tn);
            EXPECT_EQ(bx.freq->fn, by.freq->fn);
        }
    }
    EXPECT_EQ(x.offsets.mean, y.offsets.mean);
    EXPECT_EQ(x.offsets.p95, y.offsets.p95);
}

} // namespace

TEST(Preset, PublishedSetups) {
    const auto local = preset("local");
    EXPECT_EQ(local.sim.interval, ConstraintInterval(15, 30));
    EXPECT_EQ(local.sim.window, (Window{0.0, 45.0}));
    EXPECT_EQ(local.rounds, 30u);
    EXPECT_EQ(local.sim.tx_rate, 1.0);

    const auto test = preset("test");
    EXPECT_EQ(test.sim.interval, ConstraintInterval(60, 120));
    EXPECT_EQ(test.sim.window, (Window{0.0, 135.0}));
    EXPECT_EQ(test.rounds, 30u);

    EXPECT_THROW(preset("bogus"), LookupError);
}

TEST(RunExperiment, ParameterMethodIsPerfect) {
    for (const char *name : {"local", "test"}) {
        auto cfg = preset(name);
        cfg.sim.method = InjectionMethod::Parameter;
        cfg.sim.latency = latency::Pareto{1.0, 1.5};
        cfg.sim.blocktime = 8;
        cfg.rounds = 5;
        const auto result = run_experiment(cfg);
        EXPECT_EQ(result.overall_accuracy, 1.0);
        for (const auto &b : result.averaged.batches) {
            ASSERT_TRUE(b.freq.has_value());
            EXPECT_EQ(b.freq->accuracy, 1.0);
        }
    }
}

TEST(RunExperiment, DeterministicLocalRun) {
    const auto result = run_experiment(deterministic_local(1));
    EXPECT_EQ(result.overall_accuracy, 43.0 / 45.0);
    ASSERT_EQ(result.per_round_accuracy.size(), 1u);
    for (const auto &b : result.averaged.batches) {
        const bool dip = b.batch_start == 14.0 || b.batch_start == 30.0;
        EXPECT_EQ(b.freq->accuracy, dip ? 0.0 : 1.0) << "batch " << b.batch_start;
    }
    EXPECT_EQ(result.averaged.batches[14].freq->fp, 1.0);
    EXPECT_EQ(result.averaged.batches[30].freq->fn, 1.0);
}

TEST(RunExperiment, ReproducibleAndWorkerIndependent) {
    auto cfg = preset("local");
    cfg.sim.latency = latency::Exponential{1.5};
    cfg.sim.recommit_interval = 2.0;
    cfg.master_seed = 1234;
    cfg.rounds = 12;
    const auto serial = run_experiment(cfg, 1);
    const auto parallel = run_experiment(cfg, 4);
    const auto again = run_experiment(cfg, 0);
    expect_same(serial, parallel);
    expect_same(serial, again);
    EXPECT_EQ(serial.per_round_accuracy.size(), 12u);
}

TEST(RunExperiment, SeedIsolation) {
    auto cfg = preset("local");
    cfg.sim.latency = latency::Uniform{0.0, 3.0};
    cfg.master_seed = 77;
    cfg.rounds = 3;
    const auto three = run_experiment(cfg);
    cfg.rounds = 6;
    const auto six = run_experiment(cfg);
    for (std::size_t r = 0; r < 3; ++r) {
        EXPECT_EQ(three.rounds[r].seed, six.rounds[r].seed);
        EXPECT_EQ(three.rounds[r].seed, seeds::round_seed(77, r));
        EXPECT_EQ(three.per_round_accuracy[r], six.per_round_accuracy[r]);
        const auto solo = run_simulation(cfg.sim, seeds::round_seed(77, r));
        ASSERT_EQ(solo.records.size(), six.rounds[r].trace.records.size());
        for (std::size_t k = 0; k < solo.records.size(); ++k) {
            EXPECT_EQ(solo.records[k].injected_at, six.rounds[r].trace.records[k].injected_at);
        }
    }
}

TEST(RunExperiment, Validation) {
    auto cfg = preset("local");
    cfg.sim.window = Window{0.0, 29.0};
    EXPECT_THROW(run_experiment(cfg), ValidationError);
    cfg = preset("local");
    cfg.rounds = 0;
    EXPECT_THROW(run_experiment(cfg), ValidationError);
}

TEST(RunExperiment, AccurateAwayFromBounds) {
    struct Case {
        std::int64_t blocktime;
        LatencyModel latency;
        double recommit;
    };
    const Case cases[] = {{1, latency::Constant{0.0}, 0.0},
                          {4, latency::Uniform{0.0, 2.5}, 0.0},
                          {2, latency::Constant{1.5}, 3.0},
                          {8, latency::Uniform{0.5, 1.0}, 1.0}};
    for (const auto &c : cases) {
        for (const char *name : {"local", "test"}) {
            auto cfg = preset(name);
            cfg.rounds = 4;
            cfg.sim.blocktime = c.blocktime;
            cfg.sim.latency = c.latency;
            cfg.sim.recommit_interval = c.recommit;
            const auto result = run_experiment(cfg);
            const double reach = static_cast<double>(c.blocktime) + max_delay(c.latency) + c.recommit;
            const double a = static_cast<double>(cfg.sim.interval.lower());
            const double b = static_cast<double>(cfg.sim.interval.upper());
            for (const auto &batch : result.averaged.batches) {
                const double lo = batch.batch_start, hi = batch.batch_start + 1.0;
                const bool far = (hi + reach < a || lo > a) && (hi + reach < b || lo > b);
                if (far) {
                    EXPECT_EQ(batch.freq->accuracy, 1.0) << name << " b=" << c.blocktime << " batch " << lo;
                }
            }
        }
    }
}

TEST(SweepBlocktime, Examples) {
    const std::vector<std::int64_t> bs{1, 4, 8};
    const auto results = sweep_blocktime(deterministic_local(1), bs);
    ASSERT_EQ(results.size(), 3u);

    std::size_t previous_misses = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        EXPECT_EQ(results[i].config_echo.sim.blocktime, bs[i]);
        const auto expected = oracle::zero_latency_run(15, 30, 0.0, 45.0, bs[i]);
        const std::size_t misses = expected.size() - oracle::count_correct(expected);
        EXPECT_EQ(results[i].pooled_counts.fp + results[i].pooled_counts.fn, misses);
        EXPECT_GE(misses, previous_misses);
        previous_misses = misses;
    }

    const std::vector<std::int64_t> single{1};
    const auto one = sweep_blocktime(deterministic_local(1), single);
    expect_same(one.front(), run_experiment(deterministic_local(1)));

    EXPECT_THROW(sweep_blocktime(deterministic_local(1), std::vector<std::int64_t>{}), ValidationError);
    EXPECT_THROW(sweep_blocktime(deterministic_local(1), std::vector<std::int64_t>{1, 0}), ValidationError);
}

TEST(SweepBlocktime, PairedSeeds) {
    auto cfg = preset("local");
    cfg.rounds = 3;
    cfg.master_seed = 5;
    cfg.sim.latency = latency::Exponential{1.0};
    const std::vector<std::int64_t> bs{1, 4};
    const auto results = sweep_blocktime(cfg, bs);
    for (std::size_t r = 0; r < 3; ++r) {
        EXPECT_EQ(results[0].rounds[r].seed, results[1].rounds[r].seed);
    }
}

TEST(DipReport, DeterministicBlocktimeFour) {
    const auto result = run_experiment(deterministic_local(4));
    const auto dips = dip_report(result.averaged, result.config_echo.sim.interval);
    EXPECT_EQ(dips.pre_lower_width, 3);        // FP batches 12-14
    EXPECT_EQ(dips.in_interval_lower_width, 0);
    EXPECT_EQ(dips.in_interval_upper_width, 2); // FN batches 28-29
    EXPECT_EQ(dips.post_upper_width, 1);        // FN at t = 30
}

TEST(DipReport, MatchesOraclePerBlocktime) {
    for (std::int64_t b = 1; b <= 12; ++b) {
        const auto result = run_experiment(deterministic_local(b));
        const auto dips = dip_report(result.averaged, result.config_echo.sim.interval);
        // First FP send is the smallest t < 15 whose block lands at or after 15.
        std::int64_t onset = 15;
        while (onset > 0 && oracle::zero_latency_injected(static_cast<double>(onset - 1), b) >= 15.0) --onset;
        EXPECT_EQ(dips.pre_lower_width, 15 - onset) << "b=" << b;
    }
}

TEST(DipReport, GrowsAlongRefiningBlocktimes) {
    // A coarser grid whose blocktime is a multiple of the finer one stamps every
    // send no earlier, so dips can only widen. Non-nested blocktimes (5 vs 6)
    // carry no such guarantee.
    const std::vector<std::vector<std::int64_t>> chains{{1, 4, 8}, {1, 2, 4, 8}, {1, 3, 6, 12}, {1, 5, 10}};
    for (const auto &chain : chains) {
        DipReport previous{};
        for (const auto b : chain) {
            const auto result = run_experiment(deterministic_local(b));
            const auto dips = dip_report(result.averaged, result.config_echo.sim.interval);
            EXPECT_GE(dips.pre_lower_width, previous.pre_lower_width) << "b=" << b;
            EXPECT_GE(dips.in_interval_upper_width, previous.in_interval_upper_width) << "b=" << b;
            EXPECT_GE(dips.post_upper_width, previous.post_upper_width) << "b=" << b;
            previous = dips;
        }
    }
}

TEST(DipReport, NoDipsWhenAccurate) {
    auto cfg = deterministic_local(8);
    cfg.sim.method = InjectionMethod::Parameter;
    const auto result = run_experiment(cfg);
    EXPECT_EQ(dip_report(result.averaged, cfg.sim.interval), DipReport{});

    BatchTable perfect;
    perfect.window = Window{0.0, 45.0};
    for (int i = 0; i < 45; ++i) {
        perfect.batches.push_back(Batch{double(i), 1, BatchFrequencies{0, 0, 1, 0, 1}});
    }
    EXPECT_EQ(dip_report(perfect, ConstraintInterval(15, 30)), DipReport{});
    EXPECT_THROW(dip_report(perfect, ConstraintInterval(15, 50)), ValidationError);
}
