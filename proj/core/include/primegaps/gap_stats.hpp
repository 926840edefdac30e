#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "primegaps/gap_accumulator.hpp"
#include "primegaps/sieve.hpp"

namespace primegaps {

// Ascending x values at which gap statistics are reported.
class CheckpointSchedule {
 public:
  CheckpointSchedule() = default;
  // Throws UsageError unless points are strictly ascending and >= 2.
  explicit CheckpointSchedule(std::vector<std::uint64_t> points);

  // Primes nearest to round(start * ratio^i) (ties go to the smaller prime),
  // every power of ten, and `limit` itself, all within [2, limit].
  static CheckpointSchedule geometric(std::uint64_t limit, double ratio, std::uint64_t start = 10);

  const std::vector<std::uint64_t>& points() const { return points_; }

  // Throws UsageError if any point exceeds limit.
  void validate(std::uint64_t limit) const;

 private:
  std::vector<std::uint64_t> points_;
};

// Prefix statistics over all primes <= x.
struct Checkpoint {
  std::uint64_t x = 0;
  std::uint64_t last_prime = 0;  // p_{pi(x)}, 0 if x < 2
  GapAccumulator stats;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// Sieve [2, cfg.limit] in segments (split additionally at every checkpoint),
// summarise segments on `threads` workers (0 = hardware concurrency) and
// merge in address order. The result does not depend on the thread count or
// on the segment length.
std::vector<Checkpoint> scan_checkpoints(const SieveConfig& cfg, const CheckpointSchedule& schedule,
                                         unsigned threads = 1);

// Whole-range summary of (0, cfg.limit]; convenience wrapper over the same
// segment machinery.
SegmentSummary scan_range(const SieveConfig& cfg, unsigned threads = 1);

// N(x, H), S(x, H) and S1(x, H) = S - H N over gaps d >= H.
struct LargeGapCounts {
  std::uint64_t count = 0;  // N
  std::uint64_t sum = 0;    // S
  double excess = 0.0;      // S1

  friend bool operator==(const LargeGapCounts&, const LargeGapCounts&) = default;
};

// Throws UsageError if H < 0 or is not finite.
LargeGapCounts count_large_gaps(const GapAccumulator& acc, double H);

// S1(x, H) as the integral of N(x, u) over u >= H, evaluated piece by piece
// from the histogram. Independent route to count_large_gaps().excess.
double excess_by_integral(const GapAccumulator& acc, double H);

// g*(x) / log^2 x. Throws UsageError if x < 3.
double cramer_ratio(const GapAccumulator& acc, std::uint64_t x);

struct ScalRow {
  double x;
  double sum_sq;         // C(x)
  double sum_sq_over_p;  // S(x)
};

// max_j |S(x_j) - C(x_j)/x_j - Q(x_j)| where Q is the trapezoid rule for
// the integral of C(u)/u^2 over the row grid, starting at the first row.
// A row with C = 0 at x <= 2 makes the lower limit immaterial.
double scal_identity_residual(std::span<const ScalRow> rows);

// Same residual, but integrating C(u)/u^2 exactly under the assumption that C
// is constant on each [x_j, x_{j+1}) (true when the rows include every prime).
double scal_identity_residual_step(std::span<const ScalRow> rows);

}  // namespace primegaps
