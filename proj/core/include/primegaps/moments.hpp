#pragma once

#include <cstdint>
#include <utility>

#include "primegaps/sieve.hpp"

namespace primegaps {

struct MomentRequest {
  std::uint64_t x = 0;
  double h = 1.0;
  int order = 2;  // 2k, even, 2..8
  Weight weight = Weight::theta;

  // Throws UsageError on an odd or out-of-range order or h outside [1, x].
  void validate() const;
};

struct MomentResult {
  double value = 0.0;
  double main_term = 0.0;  // h^k x log^k(x/h)
  double ratio = 0.0;      // value / main_term
};

// M_{2k}(x, h) (theta) or m_{2k}(x, h) (psi): the integral over y in [1, x] of
// (F(y + h) - F(y) - h)^{2k}. The integrand is a step function of y that only
// changes at support points n and n - h, so the sweep over those events
// evaluates the integral exactly up to rounding.
MomentResult moment(const MomentRequest& req);

// The same integrand integrated over [lower, upper] instead of [1, x]; the
// request's x is ignored. Throws UsageError if upper < lower.
double moment_on_range(const MomentRequest& req, double lower, double upper);

// Integral over y in [1, min(T^4, x)] of
// (theta(y + y/T) - theta(y) - y/T)^2 / y^2, exact piece by piece.
// Throws UsageError if T <= 1 or the effective upper limit is below 1.
double selberg_integral(double T, double x);

// selberg_integral(T, x) / (log^2 T / T).
double selberg_ratio(double T, double x);

// S(x, H) / ((2/H)^{2k} M_{2k}(x, H/2)); at most 2 in exact arithmetic.
// Returns 0 when no gap reaches H. Throws UsageError if H < 2 (so H/2 >= 1)
// or k outside 1..4.
double lemma1_diagnostic(std::uint64_t x, double H, int k);

// (|m_{2k}^{1/2k} - M_{2k}^{1/2k}|, (x h^k)^{1/2k}).
std::pair<double, double> lemma2_gap(std::uint64_t x, double h, int k);

}  // namespace primegaps
