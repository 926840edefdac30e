#include "primegaps/poisson.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle/oracle.hpp"
#include "primegaps/errors.hpp"
#include "primegaps/gap_stats.hpp"

namespace primegaps {
namespace {

// Window counts pi(n + h) - pi(n) for n = 1..N straight from a prime list.
std::vector<std::uint64_t> naive_windows(const std::vector<std::uint64_t>& primes, std::uint64_t N,
                                         double h) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= N; ++n) {
    std::uint64_t c = 0;
    for (auto p : primes) {
      if (p > n && static_cast<double>(p) <= static_cast<double>(n) + h) ++c;
    }
    out.push_back(c);
  }
  return out;
}

TEST(IntervalHistogram, TenStartsWidthTwo) {
  const PrimeBitmap bitmap(100, 64);
  const auto hist = interval_histogram(10, 2.0, bitmap);
  // (1,3] holds 2 and 3; (7,9] and (8,10] hold none.
  const auto windows = naive_windows(oracle::trial_primes(20), 10, 2.0);
  EXPECT_EQ(windows, (std::vector<std::uint64_t>{2, 1, 1, 1, 1, 1, 0, 0, 1, 1}));
  EXPECT_EQ(hist.count(0), 2u);
  EXPECT_EQ(hist.count(1), 7u);
  EXPECT_EQ(hist.count(2), 1u);
  EXPECT_EQ(hist.total_primes(), 9u);
  EXPECT_DOUBLE_EQ(empirical_moment(hist, 1), 0.9);
  EXPECT_DOUBLE_EQ(empirical_moment(hist, 0), 1.0);
}

TEST(IntervalHistogram, ZeroWidthIsAllEmpty) {
  const PrimeBitmap bitmap(100, 64);
  const auto hist = interval_histogram(50, 0.0, bitmap);
  EXPECT_EQ(hist.count(0), 50u);
  EXPECT_EQ(hist.total_primes(), 0u);
}

TEST(IntervalHistogram, MatchesNaiveWindowsAndMeanIdentity) {
  const auto primes = oracle::trial_primes(3000);
  const PrimeBitmap bitmap(3000, 64);
  for (double h : {1.0, 2.5, 7.0, 13.9, 40.0}) {
    const std::uint64_t N = 2000;
    const auto hist = interval_histogram(N, h, bitmap);
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    for (auto c : naive_windows(primes, N, h)) {
      if (c >= counts.size()) counts.resize(c + 1);
      ++counts[c];
      total += c;
    }
    std::uint64_t n_sum = 0;
    for (auto c : hist.counts) n_sum += c;
    EXPECT_EQ(n_sum, N) << h;
    for (std::size_t k = 0; k < counts.size(); ++k) EXPECT_EQ(hist.count(k), counts[k]) << h << " k=" << k;
    EXPECT_EQ(hist.total_primes(), total) << h;
  }
}

TEST(IntervalHistogram, RangeErrors) {
  const PrimeBitmap bitmap(100, 64);
  EXPECT_THROW(interval_histogram(99, 2.0, bitmap), UsageError);
  EXPECT_THROW(interval_histogram(10, -1.0, bitmap), UsageError);
}

TEST(Stirling, KnownValues) {
  EXPECT_TRUE(stirling2(3, 2) == 3);
  EXPECT_TRUE(stirling2(4, 2) == 7);
  EXPECT_TRUE(stirling2(0, 0) == 1);
  EXPECT_TRUE(stirling2(5, 0) == 0);
  for (int k = 1; k <= 30; ++k) {
    EXPECT_TRUE(stirling2(k, 1) == 1) << k;
    EXPECT_TRUE(stirling2(k, k) == 1) << k;
  }
  EXPECT_THROW(stirling2(31, 2), UsageError);
  EXPECT_THROW(stirling2(3, 4), UsageError);
  EXPECT_THROW(stirling2(3, -1), UsageError);
}

TEST(Stirling, MatchesPartitionEnumeration) {
  for (int k = 1; k <= 10; ++k) {
    for (int r = 1; r <= k; ++r) {
      EXPECT_TRUE(stirling2(k, r) == oracle::partitions_into_blocks(k, r)) << k << "," << r;
    }
  }
}

TEST(Stirling, LargestRowSumsToBell30) {
  u128 bell = 0;
  for (int r = 0; r <= 30; ++r) bell += stirling2(30, r);
  // Bell(30) = 846749014511809332450147
  const u128 expected = static_cast<u128>(846749ULL) * 1'000'000'000'000'000'000ULL + 14511809332450147ULL;
  EXPECT_TRUE(bell == expected);
}

TEST(PoissonMoment, SmallCases) {
  EXPECT_DOUBLE_EQ(poisson_moment(1, 2.5), 2.5);
  EXPECT_DOUBLE_EQ(poisson_moment(2, 2.5), 2.5 + 2.5 * 2.5);
  EXPECT_DOUBLE_EQ(poisson_moment(3, 1.0), 5.0);
  EXPECT_THROW(poisson_moment(0, 1.0), UsageError);
}

TEST(PoissonMoment, MatchesBruteForcePmfSum) {
  for (double lambda : {0.1, 0.5, 1.0, 2.0, 3.7, 6.0, 10.0}) {
    for (int k = 1; k <= 8; ++k) {
      const double want = static_cast<double>(oracle::poisson_raw_moment_bruteforce(k, lambda));
      EXPECT_NEAR(poisson_moment(k, lambda), want, 1e-10 * std::max(1.0, want)) << lambda << " " << k;
    }
  }
}

TEST(PoissonPmf, SumsToOne) {
  long double s = 0;
  for (int k = 0; k <= 60; ++k) {
    const auto p = poisson_pmf(4.0, k);
    EXPECT_GE(p.value, 0.0);
    s += p.value;
  }
  EXPECT_NEAR(static_cast<double>(s), 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(poisson_pmf(2.0, 0).value, std::exp(-2.0));
}

TEST(Model, ClosedForms) {
  const double e = std::numbers::e;
  EXPECT_NEAR(model_N(e * e, 1.0), e / 2, 1e-14);
  EXPECT_NEAR(model_S(1e6, 0.0), 1e6, 1e-6);
  EXPECT_NEAR(model_N(1e6, 0.0), 1e6 / std::log(1e6), 1e-6);
  for (double lambda : {0.5, 1.0, 3.0, 6.0}) {
    EXPECT_NEAR(model_S(1e7, lambda) / model_N(1e7, lambda), (1 + lambda) * std::log(1e7), 1e-9);
  }
}

// Empirical k-th moments of window counts with h = lambda log N against the
// Poisson moments at N = 10^6, band [0.75, 1.25]. Third moments converge
// slowly for lambda <= 1 (0.56 at lambda = 0.5, 0.71 at lambda = 1), so the
// band is asserted at lambda in {2, 3} and the smaller lambdas only have to
// show the ratio improving with lambda.
TEST(PoissonMoment, EmpiricalMomentsNearPoissonAt1e6) {
  constexpr std::uint64_t N = 1'000'000;
  const PrimeBitmap bitmap(N + 200);
  const double log_n = std::log(static_cast<double>(N));
  double previous_third = 0;
  for (double lambda : {0.5, 1.0, 2.0, 3.0}) {
    const auto hist = interval_histogram(N, lambda * log_n, bitmap);
    for (int k = 1; k <= 3; ++k) {
      const double ratio = empirical_moment(hist, k) / poisson_moment(k, lambda);
      if (lambda >= 2.0) {
        EXPECT_GT(ratio, 0.75) << lambda << " " << k;
        EXPECT_LT(ratio, 1.25) << lambda << " " << k;
      }
      if (k == 3) {
        EXPECT_GT(ratio, previous_third) << lambda;
        previous_third = ratio;
      }
    }
  }
}

// Tail-model band over checkpoints in [10^6, 10^8]: N(x,H)/model_N and
// S(x,H)/model_S for H = lambda log x <= log^{1.5} x stay within a bounded
// band. Only boundedness is claimed, so the band is wide.
TEST(TailModel, RatiosBoundedOnCheckpoints) {
  const auto cps = scan_checkpoints(SieveConfig{10'000'000},
                                    CheckpointSchedule::geometric(10'000'000, 1.25));
  double lo = INFINITY, hi = 0;
  for (const auto& cp : cps) {
    if (cp.x < 1'000'000) continue;
    const double x = static_cast<double>(cp.x);
    const double lx = std::log(x);
    for (double lambda : {1.0, 3.0, 6.0}) {
      if (lambda * lx > std::pow(lx, 1.5)) continue;
      const auto g = count_large_gaps(cp.stats, lambda * lx);
      const double rn = static_cast<double>(g.count) / model_N(x, lambda);
      const double rs = static_cast<double>(g.sum) / model_S(x, lambda);
      lo = std::min({lo, rn, rs});
      hi = std::max({hi, rn, rs});
    }
  }
  EXPECT_GT(lo, 0.1);
  EXPECT_LT(hi, 10.0);
}

}  // namespace
}  // namespace primegaps
