#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace primegaps {

// Ordinates 0 < gamma_1 < gamma_2 < ... of zeta zeros 1/2 + i gamma.
class ZeroTable {
 public:
  // Throws UsageError unless the ordinates are positive and strictly ascending.
  explicit ZeroTable(std::vector<double> ordinates, std::string source_path = {});

  const std::vector<double>& ordinates() const { return ordinates_; }
  const std::string& source_path() const { return source_path_; }
  std::size_t size() const { return ordinates_.size(); }
  double max_ordinate() const { return ordinates_.back(); }

  // Number of ordinates <= T.
  std::size_t count_up_to(double T) const;

 private:
  std::vector<double> ordinates_;
  std::string source_path_;
};

// Plain text, one decimal ordinate per line, ascending. Throws IoError if the
// file cannot be read and ParseError (with the line number) on a malformed
// or out-of-order line or an empty file.
ZeroTable load_zeros(const std::string& path);
ZeroTable parse_zeros(const std::string& text, const std::string& source_path = {});

inline constexpr std::size_t kMaxPairCorrelationZeros = 20'000;

struct FAlphaResult {
  double T = 0.0;
  std::size_t zero_count = 0;  // N(T), the number of ordinates <= T
  std::vector<double> alphas;
  std::vector<double> values;
};

// Montgomery's F(alpha) = (1/N(T)) sum_{gamma, gamma' <= T}
// cos(alpha log T (gamma - gamma')) w(gamma - gamma'), w(u) = 4 / (4 + u^2).
// The cosine form is the real part of the defining exponential sum, whose
// imaginary part cancels pairwise. Throws UsageError if T exceeds the table,
// no ordinate lies below T, or more than kMaxPairCorrelationZeros are involved.
FAlphaResult f_alpha(const ZeroTable& table, double T, std::span<const double> alphas,
                     unsigned threads = 1);

// T^{-2 alpha} log T + alpha, the leading shape of F on [0, 1].
double montgomery_shape(double T, double alpha);

struct ZeroCount {
  std::size_t count = 0;
  double formula = 0.0;  // (T / 2 pi) log(T / (2 pi e))
  double diff = 0.0;     // count - formula
};

// Throws UsageError if T exceeds the table.
ZeroCount zero_count_check(const ZeroTable& table, double T);

}  // namespace primegaps
