#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "primegaps/gap_accumulator.hpp"

namespace primegaps {

inline constexpr std::uint64_t kDefaultSegmentLength = std::uint64_t{1} << 20;

struct SieveConfig {
  std::uint64_t limit = 0;  // sieve up to and including limit
  std::uint64_t segment_length = kDefaultSegmentLength;  // candidates per segment

  // Throws ConfigError unless limit >= 2 and segment_length is even and >= 64.
  void validate() const;
};

std::uint64_t isqrt(std::uint64_t n);

// Primes <= bound by a plain sieve of Eratosthenes. Used for base primes.
std::vector<std::uint32_t> small_primes(std::uint64_t bound);

// Base primes sufficient to sieve every segment up to limit.
inline std::vector<std::uint32_t> base_primes_for(std::uint64_t limit) {
  return small_primes(isqrt(limit));
}

bool is_prime_trial(std::uint64_t n);
// Smallest prime > n, by trial division.
std::uint64_t next_prime_trial(std::uint64_t n);

// Odd-only, bit-packed sieve of a half-open range (lo, hi]. The buffer is
// reused between calls to sieve().
class SegmentSieve {
 public:
  explicit SegmentSieve(std::span<const std::uint32_t> base_primes);

  // Throws ConfigError if the base primes cannot certify (lo, hi].
  void sieve(std::uint64_t lo, std::uint64_t hi);

  template <class F>
  void for_each_prime(F&& f) const {
    if (lo_ < 2 && hi_ >= 2) f(std::uint64_t{2});
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = ~words_[w];
      if (w + 1 == words_.size() && (odd_count_ & 63) != 0) {
        bits &= (std::uint64_t{1} << (odd_count_ & 63)) - 1;
      }
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        bits &= bits - 1;
        f(first_odd_ + 2 * (64 * static_cast<std::uint64_t>(w) + static_cast<std::uint64_t>(bit)));
      }
    }
  }

  std::uint64_t count() const;

 private:
  std::span<const std::uint32_t> base_;
  std::vector<std::uint64_t> words_;  // bit set = composite (or 1)
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
  std::uint64_t first_odd_ = 1;
  std::uint64_t odd_count_ = 0;
};

// Primes in (lo, hi], ascending.
std::vector<std::uint64_t> sieve_segment(const SieveConfig& cfg, std::uint64_t lo, std::uint64_t hi,
                                         std::span<const std::uint32_t> base_primes);

// Statistics of one sieved range (lo, hi]. `inner` holds the primes counted in
// the range and the gaps lying entirely inside it; the gap that straddles a
// segment boundary is added when adjacent summaries are merged.
struct SegmentSummary {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::optional<std::uint64_t> first_prime;
  std::optional<std::uint64_t> last_prime;
  GapAccumulator inner;

  friend bool operator==(const SegmentSummary&, const SegmentSummary&) = default;
};

SegmentSummary summarize_primes(std::uint64_t lo, std::uint64_t hi,
                                std::span<const std::uint64_t> primes);

// Sieve (lo, hi] and summarise it without materialising the prime list.
SegmentSummary summarize_segment(SegmentSieve& sieve, std::uint64_t lo, std::uint64_t hi);

// Combine summaries of (a.lo, a.hi] and (a.hi, b.hi]. Throws UsageError if the
// ranges are not adjacent and in order.
SegmentSummary merge_summaries(const SegmentSummary& a, const SegmentSummary& b);

struct LambdaEntry {
  std::uint64_t n;
  double weight;  // Lambda(n) = log p for n = p^m

  friend bool operator==(const LambdaEntry&, const LambdaEntry&) = default;
};

// Nonzero von Mangoldt weights for n in (lo, hi], ascending in n.
std::vector<LambdaEntry> lambda_weights(std::uint64_t lo, std::uint64_t hi,
                                        std::span<const std::uint32_t> base_primes);

enum class Weight { theta, psi };

// Forward-only cursor over the support of theta (primes) or psi (prime
// powers) in [2, end], with log p weights. Sieves lazily one segment at a time,
// so memory stays bounded by the segment length.
class ChebyshevStream {
 public:
  ChebyshevStream(Weight weight, std::uint64_t end,
                  std::uint64_t segment_length = kDefaultSegmentLength);
  ChebyshevStream(const ChebyshevStream&) = delete;
  ChebyshevStream& operator=(const ChebyshevStream&) = delete;

  // nullptr once the stream is exhausted.
  const LambdaEntry* peek();
  void pop() { ++pos_; }

 private:
  void refill();

  Weight weight_;
  std::uint64_t end_;
  std::uint64_t segment_length_;
  std::vector<std::uint32_t> base_;
  SegmentSieve sieve_;
  std::vector<LambdaEntry> buffer_;
  std::size_t pos_ = 0;
  std::uint64_t next_lo_ = 0;
};

}  // namespace primegaps
