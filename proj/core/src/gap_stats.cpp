#include "primegaps/gap_stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "primegaps/errors.hpp"

namespace primegaps {

CheckpointSchedule::CheckpointSchedule(std::vector<std::uint64_t> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] < 2) throw UsageError("checkpoints must be >= 2");
    if (i > 0 && points_[i] <= points_[i - 1]) {
      throw UsageError("checkpoints must be strictly ascending");
    }
  }
}

namespace {

std::uint64_t nearest_prime(std::uint64_t target, std::uint64_t limit) {
  if (target <= 2) return 2;
  for (std::uint64_t off = 0;; ++off) {
    if (off <= target && target - off >= 2 && is_prime_trial(target - off)) return target - off;
    if (target + off <= limit && is_prime_trial(target + off)) return target + off;
  }
}

}  // namespace

CheckpointSchedule CheckpointSchedule::geometric(std::uint64_t limit, double ratio, std::uint64_t start) {
  if (!(ratio > 1.0)) throw UsageError("checkpoint ratio must exceed 1");
  if (limit < 2) throw UsageError("checkpoint limit must be at least 2");
  std::vector<std::uint64_t> pts;
  const double lim = static_cast<double>(limit);
  for (double g = static_cast<double>(std::max<std::uint64_t>(start, 2)); g <= lim; g *= ratio) {
    pts.push_back(nearest_prime(static_cast<std::uint64_t>(std::llround(g)), limit));
  }
  for (std::uint64_t p = 10; p <= limit; p *= 10) {
    pts.push_back(p);
    if (p > limit / 10) break;
  }
  pts.push_back(limit);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return CheckpointSchedule(std::move(pts));
}

void CheckpointSchedule::validate(std::uint64_t limit) const {
  if (!points_.empty() && points_.back() > limit) {
    throw UsageError("checkpoint " + std::to_string(points_.back()) + " exceeds sieve limit " +
                     std::to_string(limit));
  }
}

namespace {

std::vector<SegmentSummary> summarize_all(const SieveConfig& cfg,
                                          std::span<const std::uint64_t> bounds, unsigned threads) {
  const auto base = base_primes_for(cfg.limit);
  const std::size_t n = bounds.size() - 1;
  std::vector<SegmentSummary> out(n);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SegmentSieve sieve(base);
    for (std::size_t i = next++; i < n; i = next++) {
      out[i] = summarize_segment(sieve, bounds[i], bounds[i + 1]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return out;
}

std::vector<std::uint64_t> segment_bounds(const SieveConfig& cfg,
                                          std::span<const std::uint64_t> extra) {
  std::vector<std::uint64_t> bounds{0};
  for (std::uint64_t b = cfg.segment_length; b < cfg.limit; b += cfg.segment_length) bounds.push_back(b);
  bounds.insert(bounds.end(), extra.begin(), extra.end());
  bounds.push_back(cfg.limit);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  return bounds;
}

}  // namespace

std::vector<Checkpoint> scan_checkpoints(const SieveConfig& cfg, const CheckpointSchedule& schedule,
                                         unsigned threads) {
  cfg.validate();
  schedule.validate(cfg.limit);
  const auto& pts = schedule.points();
  const auto bounds = segment_bounds(cfg, pts);
  const auto summaries = summarize_all(cfg, bounds, threads);

  std::vector<Checkpoint> out;
  out.reserve(pts.size());
  SegmentSummary running{0, 0, std::nullopt, std::nullopt, {}};
  auto pt = pts.begin();
  for (const auto& s : summaries) {
    running = merge_summaries(running, s);
    if (pt != pts.end() && running.hi == *pt) {
      out.push_back({*pt, running.last_prime.value_or(0), running.inner});
      ++pt;
    }
  }
  return out;
}

SegmentSummary scan_range(const SieveConfig& cfg, unsigned threads) {
  cfg.validate();
  const auto bounds = segment_bounds(cfg, {});
  const auto summaries = summarize_all(cfg, bounds, threads);
  SegmentSummary running{0, 0, std::nullopt, std::nullopt, {}};
  for (const auto& s : summaries) running = merge_summaries(running, s);
  return running;
}

LargeGapCounts count_large_gaps(const GapAccumulator& acc, double H) {
  if (!std::isfinite(H) || H < 0) throw UsageError("gap threshold H must be finite and >= 0");
  LargeGapCounts out;
  const auto& hist = acc.dense_histogram();
  const auto first = static_cast<std::size_t>(std::ceil(H));
  for (std::size_t d = first; d < hist.size(); ++d) {
    out.count += hist[d];
    out.sum += d * hist[d];
  }
  out.excess = static_cast<double>(out.sum) - H * static_cast<double>(out.count);
  return out;
}

double excess_by_integral(const GapAccumulator& acc, double H) {
  if (!std::isfinite(H) || H < 0) throw UsageError("gap threshold H must be finite and >= 0");
  // N(x, u) is constant on (d-1, d] and equals the number of gaps >= d there.
  const auto& hist = acc.dense_histogram();
  long double total = 0;
  std::uint64_t tail = 0;
  for (std::size_t d = hist.size(); d-- > 1;) {
    tail += hist[d];
    const double a = std::max(static_cast<double>(d - 1), H);
    const double b = static_cast<double>(d);
    if (b > a) total += static_cast<long double>(tail) * (b - a);
  }
  return static_cast<double>(total);
}

double cramer_ratio(const GapAccumulator& acc, std::uint64_t x) {
  if (x < 3) throw UsageError("cramer_ratio requires x >= 3");
  const double l = std::log(static_cast<double>(x));
  return static_cast<double>(acc.max_gap()) / (l * l);
}

double scal_identity_residual(std::span<const ScalRow> rows) {
  double worst = 0.0;
  long double integral = 0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j > 0) {
      const auto& a = rows[j - 1];
      const auto& b = rows[j];
      integral += 0.5L * (b.x - a.x) * (a.sum_sq / (a.x * a.x) + b.sum_sq / (b.x * b.x));
    }
    const auto& r = rows[j];
    const long double resid = r.sum_sq_over_p - r.sum_sq / r.x - integral;
    worst = std::max(worst, static_cast<double>(std::fabs(resid)));
  }
  return worst;
}

double scal_identity_residual_step(std::span<const ScalRow> rows) {
  double worst = 0.0;
  long double integral = 0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j > 0) {
      const auto& a = rows[j - 1];
      const auto& b = rows[j];
      integral += static_cast<long double>(a.sum_sq) * (b.x - a.x) / (static_cast<long double>(a.x) * b.x);
    }
    const auto& r = rows[j];
    const long double resid = r.sum_sq_over_p - r.sum_sq / r.x - integral;
    worst = std::max(worst, static_cast<double>(std::fabs(resid)));
  }
  return worst;
}

}  // namespace primegaps
