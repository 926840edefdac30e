#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "primegaps/prime_bitmap.hpp"

namespace primegaps {

// A set H_k = {h_1 < ... < h_k} of distinct nonnegative offsets.
class TupleSet {
 public:
  // Sorts the offsets. Throws UsageError on duplicates or an empty set.
  explicit TupleSet(std::vector<std::uint64_t> offsets);
  TupleSet(std::initializer_list<std::uint64_t> offsets)
      : TupleSet(std::vector<std::uint64_t>(offsets)) {}

  std::size_t size() const { return offsets_.size(); }
  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  std::uint64_t span() const { return offsets_.back() - offsets_.front(); }

  TupleSet translated(std::uint64_t by) const;

 private:
  std::vector<std::uint64_t> offsets_;
};

struct SingularValue {
  double value = 0.0;
  std::uint64_t truncation_prime = 0;
  double tail_bound = 0.0;  // estimated relative error of the truncated product
};

inline constexpr std::uint64_t kDefaultTruncation = 100'000;
// Truncation of the memoised twin-prime constant used by the k = 2 closed form.
inline constexpr std::uint64_t kTwinConstantTruncation = 10'000'000;

// Number of distinct residues of the offsets modulo p.
std::uint64_t nu(const TupleSet& tuple, std::uint64_t p);

// True iff nu(tuple, p) < p for every prime p <= k.
bool is_admissible(const TupleSet& tuple);

// Partial product of (1 - 1/(p-1)^2) over 2 < p <= truncation_prime.
// Throws UsageError if truncation_prime < 3.
double twin_constant(std::uint64_t truncation_prime);

// Hardy-Littlewood singular series. For k = 2 the closed form
// 2 C2 prod_{p | d, p > 2} (p-1)/(p-2) (0 for odd d) is used with a memoised
// C2; otherwise the Euler product is truncated at truncation_prime.
// Throws UsageError if truncation_prime < k.
SingularValue singular_series(const TupleSet& tuple, std::uint64_t truncation_prime = kDefaultTruncation);

// The Euler product truncated at truncation_prime, for any k (no closed form).
SingularValue singular_series_product(const TupleSet& tuple,
                                      std::uint64_t truncation_prime = kDefaultTruncation);

// S(d) = singular series of {0, d}, by the closed form.
double pair_singular_series(std::uint64_t d);

// Sum of the singular series over ordered k-tuples of distinct offsets in
// [1, h], divided by h^k. Supports k = 2 with h <= 10^4 and k = 3 with
// h <= 300; throws UsageError otherwise.
double gallagher_average(int k, std::uint64_t h);

// pi(x; H): number of n in [1, x] with n + h_i prime for every offset.
// Throws UsageError if x + max offset exceeds the bitmap.
std::uint64_t count_tuple(const TupleSet& tuple, std::uint64_t x, const PrimeBitmap& primes);

}  // namespace primegaps
