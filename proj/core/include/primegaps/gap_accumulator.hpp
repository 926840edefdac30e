#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace primegaps {

__extension__ typedef unsigned __int128 u128;

// Number of fractional bits of the fixed-point accumulator used for
// sum (p_{n+1} - p_n)^2 / p_{n+1}.
inline constexpr int kScalFractionBits = 64;

// Exact fixed-point value of d^2 / q, truncated to kScalFractionBits.
// Integer truncation makes the sum independent of the order and grouping of
// the terms, so parallel and sequential scans agree bit for bit.
inline u128 scal_term(std::uint64_t d, std::uint64_t q) {
  const u128 sq = static_cast<u128>(d) * d;
  return (sq << kScalFractionBits) / q;
}

double fixed_to_double(u128 value);

// Mergeable summary of a run of consecutive-prime gaps.
//
// Tracks the prime count, the gap histogram N(x, d), the maximal gap, the sum
// of squared gaps C(x) and the weighted sum S(x) = sum d^2 / p_{n+1}. Gaps are
// attributed to their right endpoint. Together with merge() and the empty
// accumulator this is a commutative monoid.
class GapAccumulator {
 public:
  // Record the gap between consecutive primes p < q. Does not touch the
  // prime count.
  void add_gap(std::uint64_t p, std::uint64_t q);

  void add_primes(std::uint64_t count) { prime_count_ += count; }

  GapAccumulator& merge(const GapAccumulator& other);

  std::uint64_t prime_count() const { return prime_count_; }
  std::uint64_t max_gap() const { return max_gap_; }
  std::uint64_t sum_sq() const { return sum_sq_; }
  u128 sum_sq_over_p_fixed() const { return sum_sq_over_p_; }
  double sum_sq_over_p() const { return fixed_to_double(sum_sq_over_p_); }

  // N(x, d): number of recorded gaps of size exactly d.
  std::uint64_t gap_count(std::uint64_t d) const {
    return d < histogram_.size() ? histogram_[d] : 0;
  }
  std::uint64_t total_gaps() const;
  // sum_d d * N(x, d), i.e. p_last - p_first for a contiguous run.
  std::uint64_t sum_gaps() const;

  // Dense histogram indexed by gap size; size() == max_gap() + 1 once any gap
  // has been recorded.
  const std::vector<std::uint64_t>& dense_histogram() const { return histogram_; }
  // Nonzero (d, count) pairs, ascending in d.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram() const;

  bool empty() const { return prime_count_ == 0 && histogram_.empty(); }

  friend bool operator==(const GapAccumulator&, const GapAccumulator&) = default;

 private:
  std::uint64_t prime_count_ = 0;
  std::vector<std::uint64_t> histogram_;
  std::uint64_t max_gap_ = 0;
  std::uint64_t sum_sq_ = 0;
  u128 sum_sq_over_p_ = 0;
};

struct GapEvent {
  std::uint64_t p;
  std::uint64_t q;
};

// Streaming update: record one gap event.
inline GapAccumulator& accumulate(GapAccumulator& acc, GapEvent event) {
  acc.add_gap(event.p, event.q);
  return acc;
}

// As accumulate(), but first confirms by trial division that q is the prime
// immediately following the prime p. Throws IntegrityError otherwise. Meant
// for oracle and debug runs only.
GapAccumulator& accumulate_checked(GapAccumulator& acc, GapEvent event);

}  // namespace primegaps
