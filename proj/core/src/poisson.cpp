#include "primegaps/poisson.hpp"

#include <array>
#include <cmath>
#include <string>

#include "primegaps/errors.hpp"

namespace primegaps {

namespace {

constexpr int kMaxStirling = 30;

using StirlingTable = std::array<std::array<u128, kMaxStirling + 1>, kMaxStirling + 1>;

constexpr StirlingTable make_stirling_table() {
  StirlingTable s{};
  s[0][0] = 1;
  for (int k = 1; k <= kMaxStirling; ++k) {
    for (int r = 1; r <= k; ++r) {
      s[k][r] = static_cast<u128>(r) * s[k - 1][r] + s[k - 1][r - 1];
    }
  }
  return s;
}

constexpr StirlingTable kStirling = make_stirling_table();

}  // namespace

std::uint64_t IntervalHistogram::total_primes() const {
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) total += k * counts[k];
  return total;
}

IntervalHistogram interval_histogram(std::uint64_t N, double h, const PrimeBitmap& primes) {
  if (!std::isfinite(h) || h < 0) throw UsageError("interval length h must be finite and >= 0");
  const auto width = static_cast<std::uint64_t>(std::floor(h));
  if (N + width > primes.limit()) {
    throw UsageError("interval histogram needs primes up to " + std::to_string(N + width) +
                     " but the bitmap stops at " + std::to_string(primes.limit()));
  }
  IntervalHistogram out{N, h, {}};
  if (N == 0) return out;

  // (n, n + h] holds the same integers as [n + 1, n + width].
  std::uint64_t window = 0;
  for (std::uint64_t m = 2; m <= 1 + width; ++m) window += primes.is_prime(m) ? 1 : 0;
  for (std::uint64_t n = 1;; ++n) {
    if (window >= out.counts.size()) out.counts.resize(window + 1, 0);
    ++out.counts[window];
    if (n == N) break;
    if (width > 0) {
      window -= primes.is_prime(n + 1) ? 1 : 0;
      window += primes.is_prime(n + 1 + width) ? 1 : 0;
    }
  }
  return out;
}

u128 stirling2(int k, int r) {
  if (r < 0 || k < r || k > kMaxStirling) {
    throw UsageError("stirling2 requires 0 <= r <= k <= 30, got k=" + std::to_string(k) +
                     " r=" + std::to_string(r));
  }
  return kStirling[k][r];
}

double poisson_moment(int k, double lambda) {
  if (k < 1) throw UsageError("poisson_moment requires k >= 1");
  // Horner in lambda over the Stirling coefficients.
  long double acc = 0;
  for (int r = k; r >= 1; --r) {
    acc = (acc + static_cast<long double>(stirling2(k, r))) * lambda;
  }
  return static_cast<double>(acc);
}

PoissonPrediction poisson_pmf(double lambda, int k) {
  if (k < 0) throw UsageError("poisson_pmf requires k >= 0");
  const double log_value =
      -lambda + k * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1.0);
  const double value = (k == 0) ? std::exp(-lambda) : std::exp(log_value);
  return {lambda, k, value};
}

double empirical_moment(const IntervalHistogram& hist, int k) {
  if (k < 0) throw UsageError("empirical_moment requires k >= 0");
  if (hist.N == 0) throw UsageError("empirical_moment of an empty histogram");
  long double total = 0;
  for (std::size_t j = 0; j < hist.counts.size(); ++j) {
    total += std::pow(static_cast<long double>(j), k) * static_cast<long double>(hist.counts[j]);
  }
  return static_cast<double>(total / static_cast<long double>(hist.N));
}

double model_N(double x, double lambda) {
  if (!(x > 1.0)) throw UsageError("model_N requires x > 1");
  return std::exp(-lambda) * x / std::log(x);
}

double model_S(double x, double lambda) {
  if (!(x > 1.0)) throw UsageError("model_S requires x > 1");
  return (1.0 + lambda) * std::exp(-lambda) * x;
}

}  // namespace primegaps
