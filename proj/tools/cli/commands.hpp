#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "primegaps/gap_stats.hpp"
#include "primegaps/sieve.hpp"

namespace primegaps::cli {

struct RunConfig {
  std::uint64_t limit = 1'000'000'000;
  std::uint64_t segment_length = kDefaultSegmentLength;
  double ratio = 1.25;
  std::uint64_t start = 10;
  std::vector<double> lambdas{1.0, 3.0, 6.0};
  std::filesystem::path output_dir = "out";
  unsigned threads = 0;  // 0 = hardware concurrency

  // Throws ConfigError unless limit >= 100, ratio > 1, every lambda is
  // positive and the sieve configuration is valid.
  void validate() const;
  SieveConfig sieve() const { return SieveConfig{limit, segment_length}; }
  CheckpointSchedule schedule() const { return CheckpointSchedule::geometric(limit, ratio, start); }
};

inline const char* const kCheckpointsFile = "checkpoints.csv";
inline const char* const kHistogramFile = "histogram.csv";
inline const char* const kPoissonFile = "poisson.csv";

// Scans [2, limit] and writes checkpoints.csv (x,pi,gstar,C,Scal),
// histogram.csv (x,d,count; nonzero counts only) and poisson.csv
// (x,lambda,N_emp,N_model,S_emp,S_model with H = lambda log x) into the output
// directory. Output is byte-identical for any thread count or segment length.
std::vector<Checkpoint> cmd_scan(const RunConfig& cfg);

enum class FigureId { maxgap, N1, N3, N6, S1, S3, S6, C, Scal };

inline constexpr FigureId kAllFigures[] = {FigureId::maxgap, FigureId::N1, FigureId::N3,
                                           FigureId::N6,     FigureId::S1, FigureId::S3,
                                           FigureId::S6,     FigureId::C,  FigureId::Scal};

std::string figure_name(FigureId id);
// Throws UsageError on an unknown name.
FigureId parse_figure(const std::string& name);

struct FigureRow {
  double x;
  double empirical;
  double model;
};

// Rows for one figure from the files written by cmd_scan. Throws SchemaError
// if a column is missing or the poisson file lacks the figure's lambda.
std::vector<FigureRow> figure_rows(FigureId id, const std::filesystem::path& scan_dir);

// Writes figure_<id>.csv (x,empirical,model,log10_empirical,log10_model) for
// each id into scan_dir; returns the paths written.
std::vector<std::filesystem::path> cmd_figures(const std::filesystem::path& scan_dir,
                                               const std::vector<FigureId>& ids);

// singular.csv: d,S_d for d = 1..max_d by the closed form.
std::filesystem::path cmd_singular(const std::filesystem::path& out_dir, std::uint64_t max_d);

// tuples.csv: x,tuple,count,singular,main_term,ratio at every power of ten up
// to limit (and limit itself); main_term = S x / log^k x. Tuples are written
// as space-separated offsets.
std::filesystem::path cmd_tuples(const RunConfig& cfg, const std::vector<std::vector<std::uint64_t>>& tuples);

// moments.csv: x,h,order,weight,value,main_term,ratio at x = limit for
// h in {log x, 2 log x, ..., floor(log x) log x, log^2 x}, orders 2 and 4,
// both weights.
std::filesystem::path cmd_moments(const RunConfig& cfg);

// f_alpha.csv: alpha,F,shape for alpha = 0, step, ..., max_alpha at height T
// (the table's largest ordinate if unset); shape is T^{-2 alpha} log T + alpha.
std::filesystem::path cmd_f_alpha(const std::filesystem::path& zeros, std::optional<double> T, double step,
                                  double max_alpha, const std::filesystem::path& out_dir, unsigned threads);

struct VerifyOptions {
  std::uint64_t limit = 100'000;
  std::optional<std::filesystem::path> zeros;
  std::optional<std::filesystem::path> checkpoints;  // validate an existing checkpoints.csv
  unsigned threads = 0;
};

// Self-check at desk scale: twin constant, direct-enumeration equivalence
// and identities up to limit, Gallagher average, Lemma 1 ratio, and, when
// given, the zero table and an existing checkpoint file. Prints one line per
// check; returns true iff all pass. File problems propagate as exceptions.
bool cmd_verify(const VerifyOptions& opts, std::ostream& report);

}  // namespace primegaps::cli
