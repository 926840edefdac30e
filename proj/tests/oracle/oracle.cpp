#include "oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> trial_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

NaiveStats naive_stats(const std::vector<std::uint64_t>& primes, std::uint64_t x) {
  NaiveStats s;
  for (std::size_t i = 0; i < primes.size() && primes[i] <= x; ++i) {
    ++s.pi;
    s.last_prime = primes[i];
    if (i == 0) continue;
    const std::uint64_t d = primes[i] - primes[i - 1];
    ++s.histogram[d];
    s.gstar = std::max(s.gstar, d);
    s.C += d * d;
    s.scal_fixed += (static_cast<primegaps::u128>(d * d) << 64) / primes[i];
    s.scal += static_cast<long double>(d * d) / primes[i];
  }
  return s;
}

NaiveLarge naive_large(const std::vector<std::uint64_t>& primes, std::uint64_t x, double H) {
  NaiveLarge out;
  for (std::size_t i = 1; i < primes.size() && primes[i] <= x; ++i) {
    const std::uint64_t d = primes[i] - primes[i - 1];
    if (static_cast<double>(d) >= H) {
      ++out.N;
      out.S += d;
      out.S1 += static_cast<long double>(d) - H;
    }
  }
  return out;
}

long double chebyshev(const std::vector<std::uint64_t>& primes, double y, bool psi) {
  long double total = 0;
  for (const auto p : primes) {
    if (static_cast<double>(p) > y) break;
    const long double w = std::log(static_cast<long double>(p));
    if (!psi) {
      total += w;
      continue;
    }
    for (long double pw = p; pw <= y; pw *= p) total += w;
  }
  return total;
}

namespace {

// F(y) by binary search on a cumulative table, to keep quadrature affordable.
struct CumulativeF {
  std::vector<std::uint64_t> support;
  std::vector<long double> prefix;

  CumulativeF(const std::vector<std::uint64_t>& primes, bool psi) {
    std::vector<std::pair<std::uint64_t, long double>> pts;
    for (const auto p : primes) {
      const long double w = std::log(static_cast<long double>(p));
      pts.emplace_back(p, w);
      if (psi) {
        for (std::uint64_t pw = p * p; pw <= primes.back(); pw *= p) pts.emplace_back(pw, w);
      }
    }
    std::sort(pts.begin(), pts.end());
    long double acc = 0;
    for (const auto& [n, w] : pts) {
      acc += w;
      support.push_back(n);
      prefix.push_back(acc);
    }
  }

  long double at(double y) const {
    const auto it = std::upper_bound(support.begin(), support.end(), y,
                                     [](double v, std::uint64_t n) { return v < static_cast<double>(n); });
    const auto idx = static_cast<std::size_t>(it - support.begin());
    return idx == 0 ? 0.0L : prefix[idx - 1];
  }
};

}  // namespace

long double midpoint_moment(const std::vector<std::uint64_t>& primes, double lower, double upper,
                            double h, int order, bool psi, double step) {
  const CumulativeF F(primes, psi);
  const auto cells = static_cast<std::uint64_t>(std::llround((upper - lower) / step));
  const double dy = (upper - lower) / static_cast<double>(cells);
  long double total = 0;
  for (std::uint64_t c = 0; c < cells; ++c) {
    const double y = lower + (static_cast<double>(c) + 0.5) * dy;
    const long double v = F.at(y + h) - F.at(y) - h;
    total += std::pow(v, order) * dy;
  }
  return total;
}

long double midpoint_selberg(const std::vector<std::uint64_t>& primes, double T, double upper,
                             double step) {
  const CumulativeF F(primes, false);
  const auto cells = static_cast<std::uint64_t>(std::llround((upper - 1.0) / step));
  const double dy = (upper - 1.0) / static_cast<double>(cells);
  long double total = 0;
  for (std::uint64_t c = 0; c < cells; ++c) {
    const double y = 1.0 + (static_cast<double>(c) + 0.5) * dy;
    const long double v = F.at(y + y / T) - F.at(y) - y / T;
    total += v * v / (static_cast<long double>(y) * y) * dy;
  }
  return total;
}

std::uint64_t partitions_into_blocks(int k, int r) {
  // Restricted growth strings a_1..a_k with a_1 = 0 and a_i <= 1 + max(a_<i).
  std::uint64_t count = 0;
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == k) {
      if (max_used + 1 == r) ++count;
      return;
    }
    for (int v = 0; v <= max_used + 1 && v < r; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      rec(i + 1, std::max(max_used, v));
    }
  };
  if (k == 0) return r == 0 ? 1 : 0;
  rec(1, 0);
  return count;
}

long double poisson_raw_moment_bruteforce(int k, double lambda) {
  long double total = 0;
  long double pmf = std::exp(-static_cast<long double>(lambda));
  for (int j = 0; j <= 200; ++j) {
    if (j > 0) pmf *= static_cast<long double>(lambda) / j;
    total += std::pow(static_cast<long double>(j), k) * pmf;
  }
  return total;
}

std::uint64_t count_tuple_trial(const std::vector<std::uint64_t>& offsets, std::uint64_t x) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    bool all = true;
    for (auto h : offsets) all = all && is_prime(n + h);
    count += all ? 1 : 0;
  }
  return count;
}

}  // namespace oracle
