#include "primegaps/gap_stats.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle/oracle.hpp"
#include "primegaps/errors.hpp"

namespace primegaps {
namespace {

std::vector<Checkpoint> scan_at(std::uint64_t limit, std::vector<std::uint64_t> xs,
                                std::uint64_t segment_length = 4096) {
  return scan_checkpoints(SieveConfig{limit, segment_length}, CheckpointSchedule(std::move(xs)));
}

TEST(GapAccumulator, StreamingUpdateOverSmallPrimes) {
  GapAccumulator acc;
  const std::uint64_t ps[] = {2, 3, 5, 7, 11, 13};
  acc.add_primes(1);
  for (std::size_t i = 1; i < std::size(ps); ++i) {
    accumulate(acc, {ps[i - 1], ps[i]});
    acc.add_primes(1);
  }
  EXPECT_EQ(acc.prime_count(), 6u);
  EXPECT_EQ(acc.max_gap(), 4u);
  EXPECT_EQ(acc.sum_sq(), 1u + 4 + 4 + 16 + 4);
  EXPECT_EQ(acc.sum_gaps(), 11u);
  const double expected = 1.0 / 3 + 4.0 / 5 + 4.0 / 7 + 16.0 / 11 + 4.0 / 13;
  EXPECT_NEAR(acc.sum_sq_over_p(), expected, 1e-15);
}

TEST(GapAccumulator, CheckedUpdateRejectsNonConsecutive) {
  GapAccumulator acc;
  EXPECT_NO_THROW(accumulate_checked(acc, {7, 11}));
  EXPECT_THROW(accumulate_checked(acc, {7, 13}), IntegrityError);
  EXPECT_THROW(accumulate_checked(acc, {8, 11}), IntegrityError);
  EXPECT_THROW(accumulate_checked(acc, {11, 7}), IntegrityError);
  EXPECT_EQ(acc.total_gaps(), 1u);
}

TEST(GapAccumulator, MergeIsCommutativeWithEmptyIdentity) {
  GapAccumulator a, b;
  a.add_gap(7, 11);
  a.add_primes(3);
  b.add_gap(23, 29);
  b.add_gap(29, 31);
  GapAccumulator ab = a;
  ab.merge(b);
  GapAccumulator ba = b;
  ba.merge(a);
  EXPECT_EQ(ab, ba);
  GapAccumulator e;
  GapAccumulator ae = a;
  ae.merge(e);
  EXPECT_EQ(ae, a);
  EXPECT_TRUE(e.empty());
}

TEST(Checkpoints, FirstRowsOfSmallScan) {
  const auto cps = scan_at(100, {2, 3, 10, 100});
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[0].stats.prime_count(), 1u);
  EXPECT_EQ(cps[0].stats.total_gaps(), 0u);
  EXPECT_EQ(cps[1].stats.prime_count(), 2u);
  EXPECT_EQ(cps[1].stats.max_gap(), 1u);  // the gap (2, 3)
  EXPECT_EQ(cps[2].last_prime, 7u);
  EXPECT_EQ(cps[2].stats.sum_sq(), 1u + 4 + 4);
  EXPECT_EQ(cps[3].stats.prime_count(), 25u);
  EXPECT_EQ(cps[3].stats.max_gap(), 8u);  // 89 -> 97
  EXPECT_EQ(cps[3].last_prime, 97u);
}

TEST(Checkpoints, MatchNaiveEnumerationUpTo1e5) {
  const auto primes = oracle::trial_primes(100'000);
  const auto schedule = CheckpointSchedule::geometric(100'000, 1.25);
  const auto cps = scan_checkpoints(SieveConfig{100'000, 1000}, schedule);
  ASSERT_EQ(cps.size(), schedule.points().size());
  for (const auto& cp : cps) {
    const auto n = oracle::naive_stats(primes, cp.x);
    ASSERT_EQ(cp.stats.prime_count(), n.pi) << cp.x;
    ASSERT_EQ(cp.last_prime, n.last_prime) << cp.x;
    ASSERT_EQ(cp.stats.max_gap(), n.gstar) << cp.x;
    ASSERT_EQ(cp.stats.sum_sq(), n.C) << cp.x;
    ASSERT_TRUE(cp.stats.sum_sq_over_p_fixed() == n.scal_fixed) << cp.x;
    ASSERT_NEAR(cp.stats.sum_sq_over_p(), static_cast<double>(n.scal), 1e-9) << cp.x;
    const auto hist = cp.stats.histogram();
    ASSERT_EQ(hist.size(), n.histogram.size()) << cp.x;
    for (const auto& [d, c] : hist) ASSERT_EQ(n.histogram.at(d), c) << cp.x << " d=" << d;
  }
}

TEST(Checkpoints, ThreadAndSegmentInvariance) {
  const auto schedule = CheckpointSchedule::geometric(2'000'000, 1.25);
  const auto ref = scan_checkpoints(SieveConfig{2'000'000, 1 << 20}, schedule, 1);
  EXPECT_EQ(scan_checkpoints(SieveConfig{2'000'000, 1 << 12}, schedule, 3), ref);
  EXPECT_EQ(scan_checkpoints(SieveConfig{2'000'000, 6000}, schedule, 0), ref);
}

TEST(Checkpoints, RejectsPointsBeyondLimit) {
  EXPECT_THROW(scan_at(100, {10, 101}), UsageError);
  EXPECT_THROW(CheckpointSchedule({10, 10}), UsageError);
  EXPECT_THROW(CheckpointSchedule({1, 10}), UsageError);
  EXPECT_THROW(CheckpointSchedule::geometric(100, 1.0), UsageError);
}

TEST(CheckpointSchedule, GeometricIncludesPowersOfTenAndLimit) {
  const auto s = CheckpointSchedule::geometric(100'000, 1.25);
  const auto& pts = s.points();
  EXPECT_EQ(pts.front(), 10u);
  EXPECT_EQ(pts[1], 11u);  // nearest prime to round(10)
  EXPECT_EQ(pts.back(), 100'000u);
  for (std::uint64_t x = 10; x <= 100'000; x *= 10) {
    EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), x)) << x;
  }
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
}

TEST(CheckpointSchedule, LastRowAtLimitCountsAllPrimes) {
  const auto cps = scan_checkpoints(SieveConfig{100'000}, CheckpointSchedule::geometric(100'000, 1.25));
  EXPECT_EQ(cps.back().x, 100'000u);
  EXPECT_EQ(cps.back().stats.prime_count(), 9592u);
}

TEST(LargeGaps, MatchNaiveForSeveralThresholds) {
  const auto primes = oracle::trial_primes(100'000);
  const auto acc = scan_range(SieveConfig{100'000}).inner;
  for (double H : {0.0, 1.0, 2.5, 5.0, 10.0, 20.0, 50.0, 72.0, 73.0}) {
    const auto got = count_large_gaps(acc, H);
    const auto want = oracle::naive_large(primes, 100'000, H);
    EXPECT_EQ(got.count, want.N) << H;
    EXPECT_EQ(got.sum, want.S) << H;
    EXPECT_NEAR(got.excess, static_cast<double>(want.S1), 1e-9) << H;
    EXPECT_NEAR(excess_by_integral(acc, H), got.excess, 1e-9 * (1 + got.excess)) << H;
  }
}

TEST(LargeGaps, ZeroThresholdGivesAllGaps) {
  const auto acc = scan_range(SieveConfig{10'000}).inner;
  const auto all = count_large_gaps(acc, 0.0);
  EXPECT_EQ(all.count, acc.total_gaps());
  EXPECT_EQ(all.sum, acc.sum_gaps());
  // The gaps telescope: sum of gaps = last prime - 2.
  EXPECT_EQ(all.sum, 9973u - 2u);
}

TEST(LargeGaps, InvalidThreshold) {
  const GapAccumulator acc;
  EXPECT_THROW(count_large_gaps(acc, -1.0), UsageError);
  EXPECT_THROW(count_large_gaps(acc, std::nan("")), UsageError);
  EXPECT_THROW(count_large_gaps(acc, INFINITY), UsageError);
}

TEST(CramerRatio, SmallValues) {
  const auto cps = scan_at(100, {3, 100});
  EXPECT_NEAR(cramer_ratio(cps[0].stats, 3), 1.0 / std::pow(std::log(3.0), 2), 1e-12);
  EXPECT_NEAR(cramer_ratio(cps[0].stats, 3), 0.8285, 1e-4);
  EXPECT_NEAR(cramer_ratio(cps[1].stats, 100), 0.3772, 1e-4);
  EXPECT_THROW(cramer_ratio(cps[0].stats, 2), UsageError);
}

TEST(CramerRatio, BoundedOnCheckpointsTo1e7) {
  const auto cps = scan_checkpoints(SieveConfig{10'000'000},
                                    CheckpointSchedule::geometric(10'000'000, 1.25));
  for (const auto& cp : cps) {
    if (cp.x < 3) continue;
    EXPECT_LT(cramer_ratio(cp.stats, cp.x), 1.0) << cp.x;
  }
}

TEST(ScalIdentity, ConstantCClosedForm) {
  // With C constant, S(x) = C/x + C (1/x0 - 1/x) = C / x0 exactly.
  const double c = 12.0;
  const double x0 = 5.0;
  std::vector<ScalRow> rows;
  for (double x = x0; x <= 500; x *= 1.5) rows.push_back({x, c, c / x0});
  EXPECT_LT(scal_identity_residual_step(rows), 1e-12);
  // The trapezoid rule overestimates the convex integrand but stays bounded.
  EXPECT_LT(scal_identity_residual(rows), 0.2);
}

TEST(ScalIdentity, StepRuleExactOnEveryPrime) {
  const auto primes = oracle::trial_primes(20'000);
  std::vector<std::uint64_t> xs(primes.begin(), primes.end());
  const auto cps = scan_at(20'000, xs);
  std::vector<ScalRow> rows;
  for (const auto& cp : cps) {
    rows.push_back({static_cast<double>(cp.x), static_cast<double>(cp.stats.sum_sq()),
                    cp.stats.sum_sq_over_p()});
  }
  EXPECT_LT(scal_identity_residual_step(rows), 1e-9);
}

TEST(ScalIdentity, TrapezoidResidualShrinksWithRefinement) {
  double previous = INFINITY;
  for (double ratio : {2.0, 1.25, 1.05}) {
    const auto cps = scan_checkpoints(SieveConfig{1'000'000},
                                      CheckpointSchedule::geometric(1'000'000, ratio, 2));
    std::vector<ScalRow> rows;
    for (const auto& cp : cps) {
      rows.push_back({static_cast<double>(cp.x), static_cast<double>(cp.stats.sum_sq()),
                      cp.stats.sum_sq_over_p()});
    }
    const double r = scal_identity_residual(rows);
    EXPECT_LT(r, previous) << ratio;
    previous = r;
  }
}

}  // namespace
}  // namespace primegaps
