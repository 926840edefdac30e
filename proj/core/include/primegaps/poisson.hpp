#pragma once

#include <cstdint>
#include <vector>

#include "primegaps/gap_accumulator.hpp"
#include "primegaps/prime_bitmap.hpp"

namespace primegaps {

// Distribution of the number of primes in (n, n + h] over start points
// n = 1..N. counts[k] is P_k(N, h).
struct IntervalHistogram {
  std::uint64_t N = 0;
  double h = 0.0;
  std::vector<std::uint64_t> counts;

  std::uint64_t count(std::size_t k) const { return k < counts.size() ? counts[k] : 0; }
  // sum_k k * counts[k] = sum_{n <= N} (pi(n + h) - pi(n))
  std::uint64_t total_primes() const;
};

// Sliding-window scan over the bitmap. Throws UsageError if N + h exceeds the
// bitmap or h < 0.
IntervalHistogram interval_histogram(std::uint64_t N, double h, const PrimeBitmap& primes);

// Stirling number of the second kind {k r}. Throws UsageError unless
// 0 <= r <= k <= 30.
u128 stirling2(int k, int r);

// k-th raw moment of a Poisson variable with mean lambda:
// sum_{r=1}^k {k r} lambda^r. Throws UsageError if k < 1.
double poisson_moment(int k, double lambda);

struct PoissonPrediction {
  double lambda;
  int k;
  double value;  // e^{-lambda} lambda^k / k!
};

PoissonPrediction poisson_pmf(double lambda, int k);

// (1/N) sum_j j^k counts[j]. k = 0 gives 1.
double empirical_moment(const IntervalHistogram& hist, int k);

// e^{-lambda} x / log x, the model count of gaps >= lambda log x.
double model_N(double x, double lambda);
// (1 + lambda) e^{-lambda} x, the model sum of those gaps.
double model_S(double x, double lambda);

}  // namespace primegaps
