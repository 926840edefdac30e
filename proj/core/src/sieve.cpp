#include "primegaps/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "primegaps/errors.hpp"

namespace primegaps {

void SieveConfig::validate() const {
  if (limit < 2) throw ConfigError("sieve limit must be at least 2");
  if (segment_length < 64 || segment_length % 2 != 0) {
    throw ConfigError("segment length must be even and at least 64, got " +
                      std::to_string(segment_length));
  }
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes(std::uint64_t bound) {
  std::vector<std::uint32_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime_trial(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime_trial(c)) ++c;
  return c;
}

SegmentSieve::SegmentSieve(std::span<const std::uint32_t> base_primes) : base_(base_primes) {}

void SegmentSieve::sieve(std::uint64_t lo, std::uint64_t hi) {
  if (hi <= lo) throw UsageError("segment (lo, hi] requires lo < hi");

  // The first prime missing from the base list must not have its square in
  // range, otherwise that square would survive as a false prime.
  const std::uint64_t last_base = base_.empty() ? 1 : base_.back();
  const std::uint64_t next = next_prime_trial(last_base);
  if (static_cast<u128>(next) * next <= hi) {
    throw ConfigError("base primes end at " + std::to_string(last_base) +
                      " which is insufficient to sieve up to " + std::to_string(hi));
  }

  lo_ = lo;
  hi_ = hi;
  first_odd_ = lo + 1 + (lo & 1);
  odd_count_ = first_odd_ > hi ? 0 : (hi - first_odd_) / 2 + 1;
  words_.assign((odd_count_ + 63) / 64, 0);
  if (odd_count_ == 0) return;

  if (first_odd_ == 1) words_[0] |= 1;

  for (const std::uint32_t p32 : base_) {
    const std::uint64_t p = p32;
    if (p == 2) continue;
    if (p * p > hi) break;
    std::uint64_t m = std::max(p * p, (first_odd_ + p - 1) / p * p);
    if (m % 2 == 0) m += p;
    for (std::uint64_t i = (m - first_odd_) / 2; i < odd_count_; i += p) {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
}

std::uint64_t SegmentSieve::count() const {
  std::uint64_t total = (lo_ < 2 && hi_ >= 2) ? 1 : 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = ~words_[w];
    if (w + 1 == words_.size() && (odd_count_ & 63) != 0) {
      bits &= (std::uint64_t{1} << (odd_count_ & 63)) - 1;
    }
    total += static_cast<std::uint64_t>(std::popcount(bits));
  }
  return total;
}

std::vector<std::uint64_t> sieve_segment(const SieveConfig& cfg, std::uint64_t lo, std::uint64_t hi,
                                         std::span<const std::uint32_t> base_primes) {
  cfg.validate();
  if (lo >= hi || hi > cfg.limit) {
    throw UsageError("segment (" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "] is empty or exceeds the sieve limit");
  }
  SegmentSieve sieve(base_primes);
  sieve.sieve(lo, hi);
  std::vector<std::uint64_t> primes;
  sieve.for_each_prime([&](std::uint64_t p) { primes.push_back(p); });
  return primes;
}

SegmentSummary summarize_primes(std::uint64_t lo, std::uint64_t hi,
                                std::span<const std::uint64_t> primes) {
  SegmentSummary s{lo, hi, std::nullopt, std::nullopt, {}};
  for (const auto p : primes) {
    if (s.last_prime) s.inner.add_gap(*s.last_prime, p);
    else s.first_prime = p;
    s.last_prime = p;
  }
  s.inner.add_primes(primes.size());
  return s;
}

SegmentSummary summarize_segment(SegmentSieve& sieve, std::uint64_t lo, std::uint64_t hi) {
  sieve.sieve(lo, hi);
  SegmentSummary s{lo, hi, std::nullopt, std::nullopt, {}};
  std::uint64_t count = 0;
  std::uint64_t last = 0;
  sieve.for_each_prime([&](std::uint64_t p) {
    if (count == 0) s.first_prime = p;
    else s.inner.add_gap(last, p);
    last = p;
    ++count;
  });
  if (count != 0) s.last_prime = last;
  s.inner.add_primes(count);
  return s;
}

SegmentSummary merge_summaries(const SegmentSummary& a, const SegmentSummary& b) {
  if (a.hi != b.lo) {
    throw UsageError("cannot merge non-adjacent segments (" + std::to_string(a.lo) + ", " +
                     std::to_string(a.hi) + "] and (" + std::to_string(b.lo) + ", " +
                     std::to_string(b.hi) + "]");
  }
  SegmentSummary out = a;
  out.hi = b.hi;
  out.inner.merge(b.inner);
  if (a.last_prime && b.first_prime) out.inner.add_gap(*a.last_prime, *b.first_prime);
  if (!out.first_prime) out.first_prime = b.first_prime;
  if (b.last_prime) out.last_prime = b.last_prime;
  return out;
}

std::vector<LambdaEntry> lambda_weights(std::uint64_t lo, std::uint64_t hi,
                                        std::span<const std::uint32_t> base_primes) {
  SegmentSieve sieve(base_primes);
  sieve.sieve(lo, hi);

  std::vector<LambdaEntry> powers;
  for (const std::uint32_t p32 : base_primes) {
    const std::uint64_t p = p32;
    if (p * p > hi) break;
    const double w = std::log(static_cast<double>(p));
    for (std::uint64_t pw = p * p;; pw *= p) {
      if (pw > lo) powers.push_back({pw, w});
      if (pw > hi / p) break;
    }
  }
  std::sort(powers.begin(), powers.end(),
            [](const LambdaEntry& x, const LambdaEntry& y) { return x.n < y.n; });

  std::vector<LambdaEntry> out;
  auto it = powers.begin();
  sieve.for_each_prime([&](std::uint64_t p) {
    while (it != powers.end() && it->n < p) out.push_back(*it++);
    out.push_back({p, std::log(static_cast<double>(p))});
  });
  out.insert(out.end(), it, powers.end());
  return out;
}

ChebyshevStream::ChebyshevStream(Weight weight, std::uint64_t end, std::uint64_t segment_length)
    : weight_(weight),
      end_(end),
      segment_length_(segment_length),
      base_(base_primes_for(std::max<std::uint64_t>(end, 2))),
      sieve_(base_) {
  refill();
}

const LambdaEntry* ChebyshevStream::peek() {
  while (pos_ == buffer_.size()) {
    if (next_lo_ >= end_) return nullptr;
    refill();
  }
  return &buffer_[pos_];
}

void ChebyshevStream::refill() {
  buffer_.clear();
  pos_ = 0;
  if (next_lo_ >= end_) return;
  const std::uint64_t lo = next_lo_;
  const std::uint64_t hi = std::min(end_, lo + segment_length_);
  next_lo_ = hi;
  if (weight_ == Weight::psi) {
    buffer_ = lambda_weights(lo, hi, base_);
    return;
  }
  sieve_.sieve(lo, hi);
  sieve_.for_each_prime(
      [&](std::uint64_t p) { buffer_.push_back({p, std::log(static_cast<double>(p))}); });
}

}  // namespace primegaps
