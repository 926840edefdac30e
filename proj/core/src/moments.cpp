#include "primegaps/moments.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "primegaps/errors.hpp"
#include "primegaps/gap_stats.hpp"

namespace primegaps {

void MomentRequest::validate() const {
  if (order < 2 || order > 8 || order % 2 != 0) {
    throw UsageError("moment order must be even and in [2, 8], got " + std::to_string(order));
  }
  if (!(h >= 1.0) || h > static_cast<double>(x)) {
    throw UsageError("moment interval h must satisfy 1 <= h <= x");
  }
}

namespace {

// Sweeps y over [lower, upper] while maintaining W(y), the weight of support
// points n with enter_at(n) <= y < n, i.e. the points inside the window that
// starts just above y. enter_at must be increasing with enter_at(n) < n.
// piece(y0, y1, W) integrates the (step-wise known) integrand over [y0, y1].
template <class EnterAt, class Piece>
long double sweep(Weight weight, double lower, double upper, std::uint64_t lead_end,
                  EnterAt enter_at, Piece piece) {
  ChebyshevStream lead(weight, lead_end);
  ChebyshevStream trail(weight, static_cast<std::uint64_t>(std::floor(upper)));

  long double window = 0;
  std::uint64_t members = 0;
  for (auto* e = lead.peek(); e != nullptr && enter_at(e->n) <= lower; e = lead.peek()) {
    if (static_cast<double>(e->n) > lower) {
      window += e->weight;
      ++members;
    }
    lead.pop();
  }
  for (auto* e = trail.peek(); e != nullptr && static_cast<double>(e->n) <= lower; e = trail.peek()) {
    trail.pop();
  }

  constexpr double inf = std::numeric_limits<double>::infinity();
  long double total = 0;
  double y = lower;
  while (y < upper) {
    const auto* in = lead.peek();
    const auto* out = trail.peek();
    const double next_in = in ? enter_at(in->n) : inf;
    const double next_out = out ? static_cast<double>(out->n) : inf;
    const double next = std::min({next_in, next_out, upper});
    if (next > y) total += piece(y, next, window);
    y = next;
    for (out = trail.peek(); out != nullptr && static_cast<double>(out->n) <= y; out = trail.peek()) {
      window -= out->weight;
      --members;
      trail.pop();
    }
    for (in = lead.peek(); in != nullptr && enter_at(in->n) <= y; in = lead.peek()) {
      window += in->weight;
      ++members;
      lead.pop();
    }
    // Clear accumulated rounding whenever the window empties.
    if (members == 0) window = 0;
  }
  return total;
}

long double int_pow(long double base, int exponent) {
  long double r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

double moment_on_range(const MomentRequest& req, double lower, double upper) {
  if (req.order < 2 || req.order > 8 || req.order % 2 != 0) {
    throw UsageError("moment order must be even and in [2, 8], got " + std::to_string(req.order));
  }
  if (!(req.h > 0.0)) throw UsageError("moment interval h must be positive");
  if (!(upper >= lower)) throw UsageError("moment range requires upper >= lower");
  const double h = req.h;
  const int order = req.order;
  const auto lead_end = static_cast<std::uint64_t>(std::floor(upper + h));
  const long double total = sweep(
      req.weight, lower, upper, lead_end,
      [h](std::uint64_t n) { return static_cast<double>(n) - h; },
      [h, order](double y0, double y1, long double w) {
        return static_cast<long double>(y1 - y0) * int_pow(w - h, order);
      });
  return static_cast<double>(total);
}

MomentResult moment(const MomentRequest& req) {
  req.validate();
  MomentResult out;
  out.value = moment_on_range(req, 1.0, static_cast<double>(req.x));
  const double x = static_cast<double>(req.x);
  const int k = req.order / 2;
  out.main_term = std::pow(req.h, k) * x * std::pow(std::log(x / req.h), k);
  out.ratio = out.value / out.main_term;
  return out;
}

double selberg_integral(double T, double x) {
  if (!(T > 1.0)) throw UsageError("selberg_integral requires T > 1");
  const double upper = std::min(T * T * T * T, x);
  if (!(upper >= 1.0)) throw UsageError("selberg_integral requires min(T^4, x) >= 1");
  const double a = 1.0 / T;
  const auto lead_end = static_cast<std::uint64_t>(std::floor(upper * (1.0 + a)));
  const long double total = sweep(
      Weight::theta, 1.0, upper, lead_end,
      [a](std::uint64_t n) { return static_cast<double>(n) / (1.0 + a); },
      [a](double y0, double y1, long double c) {
        // integral of (c - a y)^2 / y^2 = c^2/y^2 - 2ac/y + a^2
        const long double len = static_cast<long double>(y1) - y0;
        return c * c * len / (static_cast<long double>(y0) * y1) -
               2.0L * a * c * std::log1p(len / y0) + static_cast<long double>(a) * a * len;
      });
  return static_cast<double>(total);
}

double selberg_ratio(double T, double x) {
  const double l = std::log(T);
  return selberg_integral(T, x) / (l * l / T);
}

double lemma1_diagnostic(std::uint64_t x, double H, int k) {
  if (k < 1 || k > 4) throw UsageError("lemma1_diagnostic supports k in 1..4");
  if (!(H >= 2.0)) throw UsageError("lemma1_diagnostic requires H >= 2");
  const auto summary = scan_range(SieveConfig{x});
  const auto large = count_large_gaps(summary.inner, H);
  if (large.sum == 0) return 0.0;
  const MomentRequest req{x, H / 2.0, 2 * k, Weight::theta};
  const double m = moment(req).value;
  return static_cast<double>(large.sum) / (std::pow(2.0 / H, 2 * k) * m);
}

std::pair<double, double> lemma2_gap(std::uint64_t x, double h, int k) {
  const MomentRequest theta{x, h, 2 * k, Weight::theta};
  const MomentRequest psi{x, h, 2 * k, Weight::psi};
  const double inv = 1.0 / (2.0 * k);
  const double big_m = std::pow(moment(theta).value, inv);
  const double small_m = std::pow(moment(psi).value, inv);
  return {std::fabs(small_m - big_m), std::pow(static_cast<double>(x) * std::pow(h, k), inv)};
}

}  // namespace primegaps
