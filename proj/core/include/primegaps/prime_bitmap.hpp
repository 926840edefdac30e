#pragma once

#include <cstdint>
#include <vector>

#include "primegaps/sieve.hpp"

namespace primegaps {

// Primality table for every integer in [0, limit], one bit per integer.
// Built with the segmented sieve; answers is_prime() in O(1).
class PrimeBitmap {
 public:
  explicit PrimeBitmap(std::uint64_t limit, std::uint64_t segment_length = kDefaultSegmentLength);

  std::uint64_t limit() const { return limit_; }

  // n must not exceed limit().
  bool is_prime(std::uint64_t n) const { return (bits_[n >> 6] >> (n & 63)) & 1; }

  // Number of primes <= n, by scanning; n must not exceed limit().
  std::uint64_t count_up_to(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace primegaps
