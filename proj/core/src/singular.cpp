#include "primegaps/singular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "primegaps/errors.hpp"
#include "primegaps/sieve.hpp"

namespace primegaps {

TupleSet::TupleSet(std::vector<std::uint64_t> offsets) : offsets_(std::move(offsets)) {
  if (offsets_.empty()) throw UsageError("a tuple needs at least one offset");
  std::sort(offsets_.begin(), offsets_.end());
  if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end()) {
    throw UsageError("tuple offsets must be distinct");
  }
}

TupleSet TupleSet::translated(std::uint64_t by) const {
  auto shifted = offsets_;
  for (auto& h : shifted) h += by;
  return TupleSet(std::move(shifted));
}

std::uint64_t nu(const TupleSet& tuple, std::uint64_t p) {
  const auto& hs = tuple.offsets();
  if (p > tuple.span()) return hs.size();
  std::vector<std::uint64_t> residues;
  residues.reserve(hs.size());
  for (auto h : hs) residues.push_back(h % p);
  std::sort(residues.begin(), residues.end());
  return static_cast<std::uint64_t>(std::unique(residues.begin(), residues.end()) - residues.begin());
}

bool is_admissible(const TupleSet& tuple) {
  for (auto p : small_primes(tuple.size())) {
    if (nu(tuple, p) == p) return false;
  }
  return true;
}

namespace {

// Primes up to a truncation point together with prefix products of the
// generic Euler factor (1 - 1/p)^{-k} (1 - k/p), which applies to every prime
// larger than the span of the tuple.
class EulerTable {
 public:
  explicit EulerTable(std::uint64_t truncation) : primes_(small_primes(truncation)) {}

  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // Product of the generic factor over primes[from..].
  double generic_tail(std::size_t k, std::size_t from) {
    const auto& prefix = prefix_for(k);
    return prefix.back() / prefix[from];
  }

 private:
  const std::vector<double>& prefix_for(std::size_t k) {
    std::lock_guard lock(mu_);
    auto& prefix = prefix_[k];
    if (prefix.empty()) {
      prefix.reserve(primes_.size() + 1);
      long double acc = 1.0L;
      prefix.push_back(1.0);
      for (const auto p32 : primes_) {
        const long double p = p32;
        const long double kk = static_cast<long double>(k);
        // Primes p <= k are always evaluated explicitly by the caller.
        if (p > kk) acc *= std::pow(p / (p - 1.0L), kk) * (1.0L - kk / p);
        prefix.push_back(static_cast<double>(acc));
      }
    }
    return prefix;
  }

  std::vector<std::uint32_t> primes_;
  std::mutex mu_;
  std::map<std::size_t, std::vector<double>> prefix_;
};

std::shared_ptr<EulerTable> euler_table(std::uint64_t truncation) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<EulerTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[truncation];
  if (!slot) slot = std::make_shared<EulerTable>(truncation);
  return slot;
}

double euler_factor(std::uint64_t p, std::size_t k, std::uint64_t v) {
  const long double pl = static_cast<long double>(p);
  return static_cast<double>(std::pow(pl / (pl - 1.0L), static_cast<long double>(k)) *
                             (1.0L - static_cast<long double>(v) / pl));
}

double tail_bound_for(std::size_t k, std::uint64_t truncation) {
  const double P = static_cast<double>(truncation);
  return static_cast<double>(k * k) / (P * std::log(P));
}

// Euler product over the primes of `table`, using the prefix products beyond
// the span of the tuple.
double euler_product(const TupleSet& tuple, EulerTable& table) {
  const auto& primes = table.primes();
  const std::size_t k = tuple.size();
  const std::uint64_t explicit_up_to = std::max<std::uint64_t>(tuple.span(), k);
  long double value = 1.0L;
  std::size_t i = 0;
  for (; i < primes.size() && primes[i] <= explicit_up_to; ++i) {
    const std::uint64_t v = nu(tuple, primes[i]);
    if (v == primes[i]) return 0.0;
    value *= euler_factor(primes[i], k, v);
  }
  if (i < primes.size()) value *= table.generic_tail(k, i);
  return static_cast<double>(value);
}

}  // namespace

double twin_constant(std::uint64_t truncation_prime) {
  if (truncation_prime < 3) throw UsageError("twin_constant requires truncation_prime >= 3");
  static std::mutex mu;
  static std::map<std::uint64_t, double> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(truncation_prime); it != memo.end()) return it->second;
  }
  long double c = 1.0L;
  for (const auto p32 : small_primes(truncation_prime)) {
    if (p32 == 2) continue;
    const long double pm1 = static_cast<long double>(p32) - 1.0L;
    c *= 1.0L - 1.0L / (pm1 * pm1);
  }
  const auto value = static_cast<double>(c);
  std::lock_guard lock(mu);
  memo.emplace(truncation_prime, value);
  return value;
}

double pair_singular_series(std::uint64_t d) {
  if (d == 0) throw UsageError("pair offset d must be positive");
  if (d % 2 != 0) return 0.0;
  long double value = 2.0L * twin_constant(kTwinConstantTruncation);
  std::uint64_t m = d;
  while (m % 2 == 0) m /= 2;
  for (std::uint64_t p = 3; p <= m / p; p += 2) {
    if (m % p != 0) continue;
    value *= static_cast<long double>(p - 1) / static_cast<long double>(p - 2);
    while (m % p == 0) m /= p;
  }
  if (m > 1) value *= static_cast<long double>(m - 1) / static_cast<long double>(m - 2);
  return static_cast<double>(value);
}

SingularValue singular_series_product(const TupleSet& tuple, std::uint64_t truncation_prime) {
  if (truncation_prime < tuple.size()) {
    throw UsageError("truncation prime " + std::to_string(truncation_prime) +
                     " is smaller than the tuple size");
  }
  if (!is_admissible(tuple)) return {0.0, truncation_prime, 0.0};
  auto table = euler_table(truncation_prime);
  return {euler_product(tuple, *table), truncation_prime, tail_bound_for(tuple.size(), truncation_prime)};
}

SingularValue singular_series(const TupleSet& tuple, std::uint64_t truncation_prime) {
  if (truncation_prime < tuple.size()) {
    throw UsageError("truncation prime " + std::to_string(truncation_prime) +
                     " is smaller than the tuple size");
  }
  if (tuple.size() == 1) return {1.0, truncation_prime, 0.0};
  if (tuple.size() == 2) {
    const double v = pair_singular_series(tuple.span());
    if (v == 0.0) return {0.0, kTwinConstantTruncation, 0.0};
    return {v, kTwinConstantTruncation, tail_bound_for(2, kTwinConstantTruncation)};
  }
  return singular_series_product(tuple, truncation_prime);
}

double gallagher_average(int k, std::uint64_t h) {
  if (k == 2) {
    if (h < 1 || h > 10'000) throw UsageError("gallagher_average(2, h) supports 1 <= h <= 10^4");
    // Ordered pairs at distance d in [1, h]: 2 (h - d).
    long double sum = 0;
    for (std::uint64_t d = 2; d < h; d += 2) {
      sum += 2.0L * static_cast<long double>(h - d) * pair_singular_series(d);
    }
    const long double hh = static_cast<long double>(h);
    return static_cast<double>(sum / (hh * hh));
  }
  if (k == 3) {
    if (h < 1 || h > 300) throw UsageError("gallagher_average(3, h) supports 1 <= h <= 300");
    auto table = euler_table(kDefaultTruncation);
    // Sorted triples {a, a+u, a+u+v} in [1, h] number h - u - v for each
    // (u, v); each set occurs in 3! orders.
    long double sum = 0;
    for (std::uint64_t u = 1; u + 1 < h; ++u) {
      for (std::uint64_t v = 1; u + v < h; ++v) {
        const TupleSet t{0, u, u + v};
        sum += static_cast<long double>(h - u - v) * euler_product(t, *table);
      }
    }
    const long double hh = static_cast<long double>(h);
    return static_cast<double>(6.0L * sum / (hh * hh * hh));
  }
  throw UsageError("gallagher_average supports k = 2 or k = 3 only");
}

std::uint64_t count_tuple(const TupleSet& tuple, std::uint64_t x, const PrimeBitmap& primes) {
  const auto& hs = tuple.offsets();
  if (x + hs.back() > primes.limit()) {
    throw UsageError("count_tuple: x + max offset = " + std::to_string(x + hs.back()) +
                     " exceeds sieved range " + std::to_string(primes.limit()));
  }
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    bool all = true;
    for (auto h : hs) {
      if (!primes.is_prime(n + h)) {
        all = false;
        break;
      }
    }
    count += all ? 1 : 0;
  }
  return count;
}

}  // namespace primegaps
