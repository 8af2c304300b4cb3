#include "execacc/errors.hpp"
#include "execacc/injection.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace execacc;

TEST(InjectParameter, Identity) {
    EXPECT_EQ(inject_parameter(WorldTime(5.0)), 5.0);
    EXPECT_EQ(inject_parameter(WorldTime(0.0)), 0.0);
    EXPECT_EQ(inject_parameter(WorldTime(123.4)), 123.4);
}

TEST(AssignBlockTimestamp, Examples) {
    const BlockTimestamp parent(12);
    EXPECT_EQ(assign_block_timestamp(policy::WallClockFloor{}, parent, WorldTime(16.7), 4).seconds(), 16);
    EXPECT_EQ(assign_block_timestamp(policy::WallClockFloor{}, parent, WorldTime(12.3), 1).seconds(), 13);
    EXPECT_EQ(assign_block_timestamp(policy::ParentPlusBlocktime{}, parent, WorldTime(17.9), 4).seconds(), 16);
    EXPECT_EQ(assign_block_timestamp(policy::SkewedWallClock{2}, parent, WorldTime(16.7), 4).seconds(), 18);
}

TEST(AssignBlockTimestamp, NegativeSkewIsBumped) {
    EXPECT_EQ(assign_block_timestamp(policy::SkewedWallClock{-10}, BlockTimestamp(12), WorldTime(16.7), 4).seconds(),
              13);
}

TEST(AssignBlockTimestamp, RejectsZeroBlocktime) {
    EXPECT_THROW(assign_block_timestamp(policy::WallClockFloor{}, BlockTimestamp(0), WorldTime(1.0), 0),
                 ValidationError);
}

TEST(AssignBlockTimestamp, StrictlyMonotone) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20000; ++i) {
        const TimestampPolicy policies[] = {policy::WallClockFloor{}, policy::ParentPlusBlocktime{},
                                            policy::SkewedWallClock{static_cast<std::int64_t>(rng() % 21) - 10}};
        const BlockTimestamp parent(static_cast<std::int64_t>(rng() % 1000));
        const WorldTime production(std::uniform_real_distribution<double>(0.0, 1200.0)(rng));
        const std::int64_t blocktime = 1 + static_cast<std::int64_t>(rng() % 10);
        for (const auto &p : policies) {
            ASSERT_GT(assign_block_timestamp(p, parent, production, blocktime), parent);
        }
    }
}

TEST(AssignBlockTimestamp, ParentPlusBlocktimeChains) {
    for (std::int64_t genesis : {0, 7}) {
        for (std::int64_t b : {1, 4, 8}) {
            BlockTimestamp head(genesis);
            for (int k = 1; k <= 50; ++k) {
                head = assign_block_timestamp(policy::ParentPlusBlocktime{}, head, WorldTime(0.0), b);
                ASSERT_EQ(head.seconds(), genesis + k * b);
            }
        }
    }
}

TEST(InjectedTimeOf, MethodSelectsSource) {
    TransactionRecord rec;
    rec.sent_at = WorldTime(14.5);
    rec.block_timestamp = BlockTimestamp(16);
    rec.injected_at = 16.0;
    rec.block_height = 3;
    EXPECT_EQ(injected_time_of(rec, InjectionMethod::BlockTimestamp), 16.0);
    EXPECT_EQ(injected_time_of(rec, InjectionMethod::Parameter, 14.5), 14.5);
    EXPECT_THROW(injected_time_of(rec, InjectionMethod::Parameter), ConfigError);
}

TEST(PolicyNames, RoundTrip) {
    for (const char *name : {"wall-clock-floor", "parent-plus-blocktime", "skewed-wall-clock"}) {
        EXPECT_EQ(policy_name(parse_timestamp_policy(name, 3)), name);
    }
    EXPECT_EQ(std::get<policy::SkewedWallClock>(parse_timestamp_policy("skewed-wall-clock", -3)).offset, -3);
    EXPECT_THROW(parse_timestamp_policy("median-time-past"), ValidationError);
    EXPECT_EQ(parse_injection_method("parameter"), InjectionMethod::Parameter);
    EXPECT_EQ(parse_injection_method("block-timestamp"), InjectionMethod::BlockTimestamp);
    EXPECT_THROW(parse_injection_method("oracle"), ValidationError);
}
