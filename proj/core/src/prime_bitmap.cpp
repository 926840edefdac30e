#include "primegaps/prime_bitmap.hpp"

#include <algorithm>
#include <bit>

namespace primegaps {

PrimeBitmap::PrimeBitmap(std::uint64_t limit, std::uint64_t segment_length)
    : limit_(limit), bits_(limit / 64 + 1, 0) {
  if (limit < 2) return;
  const auto base = base_primes_for(limit);
  SegmentSieve sieve(base);
  for (std::uint64_t lo = 0; lo < limit; lo += segment_length) {
    const std::uint64_t hi = std::min(limit, lo + segment_length);
    sieve.sieve(lo, hi);
    sieve.for_each_prime([&](std::uint64_t p) { bits_[p >> 6] |= std::uint64_t{1} << (p & 63); });
  }
}

std::uint64_t PrimeBitmap::count_up_to(std::uint64_t n) const {
  std::uint64_t total = 0;
  const std::uint64_t full = n >> 6;
  for (std::uint64_t w = 0; w < full; ++w) total += static_cast<std::uint64_t>(std::popcount(bits_[w]));
  const std::uint64_t tail = bits_[full] & ((std::uint64_t{2} << (n & 63)) - 1);
  return total + static_cast<std::uint64_t>(std::popcount(tail));
}

}  // namespace primegaps
