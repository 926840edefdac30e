#include "primegaps/gap_accumulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "primegaps/errors.hpp"
#include "primegaps/sieve.hpp"

namespace primegaps {

double fixed_to_double(u128 value) {
  const auto whole = static_cast<std::uint64_t>(value >> kScalFractionBits);
  const auto frac = static_cast<std::uint64_t>(value);
  return static_cast<double>(whole) + std::ldexp(static_cast<double>(frac), -kScalFractionBits);
}

void GapAccumulator::add_gap(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t d = q - p;
  if (d >= histogram_.size()) histogram_.resize(d + 1, 0);
  ++histogram_[d];
  max_gap_ = std::max(max_gap_, d);
  sum_sq_ += d * d;
  sum_sq_over_p_ += scal_term(d, q);
}

GapAccumulator& GapAccumulator::merge(const GapAccumulator& other) {
  prime_count_ += other.prime_count_;
  if (other.histogram_.size() > histogram_.size()) histogram_.resize(other.histogram_.size(), 0);
  for (std::size_t d = 0; d < other.histogram_.size(); ++d) histogram_[d] += other.histogram_[d];
  max_gap_ = std::max(max_gap_, other.max_gap_);
  sum_sq_ += other.sum_sq_;
  sum_sq_over_p_ += other.sum_sq_over_p_;
  return *this;
}

std::uint64_t GapAccumulator::total_gaps() const {
  std::uint64_t total = 0;
  for (auto c : histogram_) total += c;
  return total;
}

std::uint64_t GapAccumulator::sum_gaps() const {
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < histogram_.size(); ++d) total += d * histogram_[d];
  return total;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> GapAccumulator::histogram() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t d = 0; d < histogram_.size(); ++d) {
    if (histogram_[d] != 0) out.emplace_back(d, histogram_[d]);
  }
  return out;
}

GapAccumulator& accumulate_checked(GapAccumulator& acc, GapEvent event) {
  if (event.q <= event.p || !is_prime_trial(event.p) || next_prime_trial(event.p) != event.q) {
    throw IntegrityError("gap event (" + std::to_string(event.p) + ", " + std::to_string(event.q) +
                         ") is not a pair of consecutive primes");
  }
  return accumulate(acc, event);
}

}  // namespace primegaps
