#include "primegaps/paircorr.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "primegaps/errors.hpp"

namespace primegaps {

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source_path)
    : ordinates_(std::move(ordinates)), source_path_(std::move(source_path)) {
  if (ordinates_.empty()) throw UsageError("zero table is empty");
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    if (!(ordinates_[i] > 0.0) || !std::isfinite(ordinates_[i])) {
      throw UsageError("zero ordinates must be positive and finite");
    }
    if (i > 0 && ordinates_[i] <= ordinates_[i - 1]) {
      throw UsageError("zero ordinates must be strictly ascending");
    }
  }
}

std::size_t ZeroTable::count_up_to(double T) const {
  return static_cast<std::size_t>(std::upper_bound(ordinates_.begin(), ordinates_.end(), T) -
                                  ordinates_.begin());
}

ZeroTable parse_zeros(const std::string& text, const std::string& source_path) {
  std::vector<double> ordinates;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    double value = 0.0;
    const char* begin = line.data();
    const char* end = begin + line.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::fixed);
    if (line.empty() || ec != std::errc{} || ptr != end) {
      throw ParseError("expected a decimal ordinate, got '" + line + "'", line_no);
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ParseError("ordinate must be positive", line_no);
    }
    if (!ordinates.empty() && value <= ordinates.back()) {
      throw ParseError("ordinates must be strictly ascending", line_no);
    }
    ordinates.push_back(value);
  }
  if (ordinates.empty()) throw ParseError("no zeros in " + (source_path.empty() ? "input" : source_path), 0);
  return ZeroTable(std::move(ordinates), source_path);
}

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open zeros file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading zeros file " + path);
  return parse_zeros(buf.str(), path);
}

namespace {

constexpr std::size_t kPairBlock = 256;

}  // namespace

FAlphaResult f_alpha(const ZeroTable& table, double T, std::span<const double> alphas,
                     unsigned threads) {
  if (!(T <= table.max_ordinate())) {
    throw UsageError("T exceeds the zero table (max ordinate " + std::to_string(table.max_ordinate()) + ")");
  }
  const std::size_t n = table.count_up_to(T);
  if (n == 0) throw UsageError("no zero ordinate lies below T");
  if (n > kMaxPairCorrelationZeros) {
    throw UsageError("F(alpha) pair sum is limited to " + std::to_string(kMaxPairCorrelationZeros) + " zeros");
  }
  const auto& g = table.ordinates();
  const double log_t = std::log(T);

  FAlphaResult out;
  out.T = T;
  out.zero_count = n;
  out.alphas.assign(alphas.begin(), alphas.end());
  out.values.resize(alphas.size());

  const std::size_t blocks = (n + kPairBlock - 1) / kPairBlock;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  for (std::size_t a = 0; a < alphas.size(); ++a) {
    // Cosine is even, so F(-alpha) == F(alpha) exactly.
    const double freq = std::fabs(alphas[a]) * log_t;
    // Off-diagonal sum over i < j, blocked on i; blocks are summed in order.
    std::vector<long double> partial(blocks, 0.0L);
    auto run_block = [&](std::size_t b) {
      long double s = 0;
      const std::size_t i_end = std::min(n, (b + 1) * kPairBlock);
      for (std::size_t i = b * kPairBlock; i < i_end; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const double u = g[j] - g[i];
          s += std::cos(freq * u) * (4.0 / (4.0 + u * u));
        }
      }
      partial[b] = s;
    };
    if (threads <= 1 || blocks == 1) {
      for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < std::min<std::size_t>(threads, blocks); ++t) {
        pool.emplace_back([&] {
          for (std::size_t b = next++; b < blocks; b = next++) run_block(b);
        });
      }
    }
    long double off = 0;
    for (const auto s : partial) off += s;
    out.values[a] = static_cast<double>((static_cast<long double>(n) + 2.0L * off) / n);
  }
  return out;
}

double montgomery_shape(double T, double alpha) {
  return std::pow(T, -2.0 * alpha) * std::log(T) + alpha;
}

ZeroCount zero_count_check(const ZeroTable& table, double T) {
  if (!(T <= table.max_ordinate())) throw UsageError("T exceeds the zero table");
  const double two_pi = 2.0 * std::numbers::pi;
  ZeroCount out;
  out.count = table.count_up_to(T);
  out.formula = T / two_pi * std::log(T / (two_pi * std::numbers::e));
  out.diff = static_cast<double>(out.count) - out.formula;
  return out;
}

}  // namespace primegaps
