#include "commands.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "csv.hpp"
#include "primegaps/errors.hpp"
#include "primegaps/moments.hpp"
#include "primegaps/paircorr.hpp"
#include "primegaps/poisson.hpp"
#include "primegaps/singular.hpp"

namespace primegaps::cli {

namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (limit < 100) throw ConfigError("--limit must be at least 100");
  if (!(ratio > 1.0)) throw ConfigError("--ratio must exceed 1");
  if (start < 2) throw ConfigError("--start must be at least 2");
  for (double l : lambdas) {
    if (!(l > 0.0) || !std::isfinite(l)) throw ConfigError("--lambda values must be positive");
  }
  sieve().validate();
}

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

}  // namespace

std::vector<Checkpoint> cmd_scan(const RunConfig& cfg) {
  cfg.validate();
  ensure_dir(cfg.output_dir);
  const auto checkpoints = scan_checkpoints(cfg.sieve(), cfg.schedule(), cfg.threads);

  CsvWriter cp(cfg.output_dir / kCheckpointsFile, {"x", "pi", "gstar", "C", "Scal"});
  CsvWriter hist(cfg.output_dir / kHistogramFile, {"x", "d", "count"});
  CsvWriter pois(cfg.output_dir / kPoissonFile, {"x", "lambda", "N_emp", "N_model", "S_emp", "S_model"});
  for (const auto& c : checkpoints) {
    const auto& s = c.stats;
    cp.field(c.x).field(s.prime_count()).field(s.max_gap()).field(s.sum_sq()).field(s.sum_sq_over_p());
    cp.end_row();
    for (const auto& [d, count] : s.histogram()) {
      hist.field(c.x).field(d).field(count);
      hist.end_row();
    }
    const double x = static_cast<double>(c.x);
    for (double lambda : cfg.lambdas) {
      const auto large = count_large_gaps(s, lambda * std::log(x));
      pois.field(c.x).field(lambda);
      pois.field(large.count).field(model_N(x, lambda));
      pois.field(large.sum).field(model_S(x, lambda));
      pois.end_row();
    }
  }
  cp.close();
  hist.close();
  pois.close();
  return checkpoints;
}

std::string figure_name(FigureId id) {
  switch (id) {
    case FigureId::maxgap: return "maxgap";
    case FigureId::N1: return "N1";
    case FigureId::N3: return "N3";
    case FigureId::N6: return "N6";
    case FigureId::S1: return "S1";
    case FigureId::S3: return "S3";
    case FigureId::S6: return "S6";
    case FigureId::C: return "C";
    case FigureId::Scal: return "Scal";
  }
  throw UsageError("unknown figure id");
}

FigureId parse_figure(const std::string& name) {
  for (auto id : kAllFigures) {
    if (figure_name(id) == name) return id;
  }
  throw UsageError("unknown figure '" + name + "' (expected maxgap, N1, N3, N6, S1, S3, S6, C or Scal)");
}

namespace {

std::vector<FigureRow> poisson_rows(const fs::path& scan_dir, double lambda, bool sums) {
  const auto t = CsvTable::read(scan_dir / kPoissonFile);
  t.require({"x", "lambda", "N_emp", "N_model", "S_emp", "S_model"});
  const auto cx = t.column("x");
  const auto cl = t.column("lambda");
  const auto ce = t.column(sums ? "S_emp" : "N_emp");
  const auto cm = t.column(sums ? "S_model" : "N_model");
  std::vector<FigureRow> rows;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.number(r, cl) != lambda) continue;
    rows.push_back({t.number(r, cx), t.number(r, ce), t.number(r, cm)});
  }
  if (rows.empty()) {
    throw SchemaError((scan_dir / kPoissonFile).string() + " has no rows for lambda = " + format_double(lambda));
  }
  return rows;
}

}  // namespace

std::vector<FigureRow> figure_rows(FigureId id, const fs::path& scan_dir) {
  switch (id) {
    case FigureId::N1: return poisson_rows(scan_dir, 1.0, false);
    case FigureId::N3: return poisson_rows(scan_dir, 3.0, false);
    case FigureId::N6: return poisson_rows(scan_dir, 6.0, false);
    case FigureId::S1: return poisson_rows(scan_dir, 1.0, true);
    case FigureId::S3: return poisson_rows(scan_dir, 3.0, true);
    case FigureId::S6: return poisson_rows(scan_dir, 6.0, true);
    default: break;
  }
  const auto t = CsvTable::read(scan_dir / kCheckpointsFile);
  t.require({"x", "pi", "gstar", "C", "Scal"});
  const auto cx = t.column("x");
  const char* column = id == FigureId::maxgap ? "gstar" : id == FigureId::C ? "C" : "Scal";
  const auto ce = t.column(column);
  std::vector<FigureRow> rows;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const double x = t.number(r, cx);
    const double lx = std::log(x);
    const double model = id == FigureId::C ? 2.0 * x * lx : lx * lx;
    rows.push_back({x, t.number(r, ce), model});
  }
  return rows;
}

std::vector<fs::path> cmd_figures(const fs::path& scan_dir, const std::vector<FigureId>& ids) {
  std::vector<fs::path> written;
  for (auto id : ids) {
    const auto rows = figure_rows(id, scan_dir);
    const auto path = scan_dir / ("figure_" + figure_name(id) + ".csv");
    CsvWriter w(path, {"x", "empirical", "model", "log10_empirical", "log10_model"});
    for (const auto& r : rows) {
      w.field(r.x).field(r.empirical).field(r.model).field(std::log10(r.empirical)).field(std::log10(r.model));
      w.end_row();
    }
    w.close();
    written.push_back(path);
  }
  return written;
}

fs::path cmd_singular(const fs::path& out_dir, std::uint64_t max_d) {
  if (max_d < 1) throw UsageError("--max-d must be at least 1");
  ensure_dir(out_dir);
  const auto path = out_dir / "singular.csv";
  CsvWriter w(path, {"d", "S_d"});
  for (std::uint64_t d = 1; d <= max_d; ++d) {
    w.field(d).field(pair_singular_series(d));
    w.end_row();
  }
  w.close();
  return path;
}

fs::path cmd_tuples(const RunConfig& cfg, const std::vector<std::vector<std::uint64_t>>& tuples) {
  cfg.validate();
  ensure_dir(cfg.output_dir);
  std::uint64_t reach = 0;
  std::vector<TupleSet> sets;
  for (const auto& offs : tuples) {
    sets.emplace_back(offs);
    reach = std::max(reach, sets.back().offsets().back());
  }
  const PrimeBitmap bitmap(cfg.limit + reach, cfg.segment_length);
  std::vector<std::uint64_t> xs;
  for (std::uint64_t x = 100; x < cfg.limit; x *= 10) xs.push_back(x);
  xs.push_back(cfg.limit);

  const auto path = cfg.output_dir / "tuples.csv";
  CsvWriter w(path, {"x", "tuple", "count", "singular", "main_term", "ratio"});
  for (const auto& t : sets) {
    std::string name;
    for (auto h : t.offsets()) name += (name.empty() ? "" : " ") + std::to_string(h);
    const double s = singular_series(t).value;
    for (auto x : xs) {
      const auto count = count_tuple(t, x, bitmap);
      const double xd = static_cast<double>(x);
      const double main = s * xd / std::pow(std::log(xd), static_cast<double>(t.size()));
      w.field(x).field(name).field(count).field(s).field(main);
      w.field(main > 0 ? static_cast<double>(count) / main : 0.0);
      w.end_row();
    }
  }
  w.close();
  return path;
}

fs::path cmd_moments(const RunConfig& cfg) {
  cfg.validate();
  ensure_dir(cfg.output_dir);
  const double x = static_cast<double>(cfg.limit);
  const double lx = std::log(x);
  std::vector<double> hs;
  for (int j = 1; j <= static_cast<int>(lx); ++j) hs.push_back(j * lx);
  hs.push_back(lx * lx);

  const auto path = cfg.output_dir / "moments.csv";
  CsvWriter w(path, {"x", "h", "order", "weight", "value", "main_term", "ratio"});
  for (double h : hs) {
    for (int order : {2, 4}) {
      for (Weight wt : {Weight::theta, Weight::psi}) {
        const auto r = moment({cfg.limit, h, order, wt});
        w.field(cfg.limit).field(h).field(order).field(wt == Weight::theta ? "theta" : "psi");
        w.field(r.value).field(r.main_term).field(r.ratio);
        w.end_row();
      }
    }
  }
  w.close();
  return path;
}

fs::path cmd_f_alpha(const fs::path& zeros, std::optional<double> T, double step, double max_alpha,
                     const fs::path& out_dir, unsigned threads) {
  if (!(step > 0.0) || !(max_alpha >= 0.0)) throw UsageError("alpha grid needs step > 0 and max >= 0");
  const auto table = load_zeros(zeros.string());
  const double height = T.value_or(table.max_ordinate());
  std::vector<double> alphas;
  for (int i = 0; i * step <= max_alpha + 1e-12; ++i) alphas.push_back(i * step);
  const auto r = f_alpha(table, height, alphas, threads);

  ensure_dir(out_dir);
  const auto path = out_dir / "f_alpha.csv";
  CsvWriter w(path, {"alpha", "F", "shape"});
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    w.field(alphas[i]).field(r.values[i]).field(montgomery_shape(height, alphas[i]));
    w.end_row();
  }
  w.close();
  return path;
}

namespace {

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all_ &= ok;
  }
  bool all() const { return all_; }

 private:
  std::ostream& out_;
  bool all_ = true;
};

std::string fmt(double v) { return format_double(v); }

// Direct enumeration over trial-division primes, compared with the
// segmented scan at every checkpoint.
bool enumeration_matches(const std::vector<Checkpoint>& cps, std::uint64_t limit, std::string& detail) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime_trial(n)) primes.push_back(n);
  }
  const double Hs[] = {1, 5, 10, 20, 50};
  std::size_t i = 0;
  std::map<std::uint64_t, std::uint64_t> hist;
  std::uint64_t gstar = 0, C = 0;
  u128 scal = 0;
  for (const auto& cp : cps) {
    for (; i < primes.size() && primes[i] <= cp.x; ++i) {
      if (i == 0) continue;
      const auto d = primes[i] - primes[i - 1];
      ++hist[d];
      gstar = std::max(gstar, d);
      C += d * d;
      scal += scal_term(d, primes[i]);
    }
    const auto& s = cp.stats;
    bool ok = s.prime_count() == i && s.max_gap() == gstar && s.sum_sq() == C &&
              s.sum_sq_over_p_fixed() == scal && cp.last_prime == (i ? primes[i - 1] : 0);
    const auto h = s.histogram();
    ok = ok && h.size() == hist.size() && std::equal(h.begin(), h.end(), hist.begin(), [](auto& a, auto& b) {
           return a.first == b.first && a.second == b.second;
         });
    for (double H : Hs) {
      std::uint64_t n = 0, sum = 0;
      for (const auto& [d, c] : hist) {
        if (static_cast<double>(d) >= H) {
          n += c;
          sum += d * c;
        }
      }
      const auto got = count_large_gaps(s, H);
      ok = ok && got.count == n && got.sum == sum && got.excess == static_cast<double>(sum) - H * static_cast<double>(n);
    }
    if (!ok) {
      detail = "mismatch at x = " + std::to_string(cp.x);
      return false;
    }
  }
  detail = std::to_string(cps.size()) + " checkpoints, pi = " + std::to_string(i);
  return true;
}

bool identities_hold(const std::vector<Checkpoint>& cps, std::string& detail) {
  for (const auto& cp : cps) {
    const auto& s = cp.stats;
    std::uint64_t sum_d = 0, sum_d2 = 0;
    for (const auto& [d, c] : s.histogram()) {
      sum_d += d * c;
      sum_d2 += d * d * c;
    }
    bool ok = s.sum_sq() == sum_d2 && (cp.last_prime < 2 || sum_d == cp.last_prime - 2);
    for (double H : {1.0, 5.0, 10.0, 20.0, 50.0}) {
      const auto g = count_large_gaps(s, H);
      ok = ok && excess_by_integral(s, H) == static_cast<double>(g.sum) - H * static_cast<double>(g.count);
    }
    if (!ok) {
      detail = "identity violated at x = " + std::to_string(cp.x);
      return false;
    }
  }
  detail = std::to_string(cps.size()) + " checkpoints";
  return true;
}

}  // namespace

bool cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  if (opts.limit < 100) throw UsageError("verify --limit must be at least 100");
  Report report(out);

  const double c2 = twin_constant(1'000'000);
  report.check("twin-constant", std::round(c2 * 1e5) == 66016.0, "C2(1e6) = " + fmt(c2));

  const auto cps =
      scan_checkpoints(SieveConfig{opts.limit}, CheckpointSchedule::geometric(opts.limit, 1.25), opts.threads);
  std::string detail;
  const bool enum_ok = enumeration_matches(cps, opts.limit, detail);
  report.check("oracle-equivalence", enum_ok, detail);
  const bool id_ok = identities_hold(cps, detail);
  report.check("identities", id_ok, detail);

  const double g = gallagher_average(2, 10'000);
  report.check("gallagher", std::fabs(g - 1.0) <= 0.02, "average(2, 1e4) = " + fmt(g));

  double worst = 0.0;
  for (double H : {10.0, 20.0, 40.0}) {
    for (int k : {1, 2}) worst = std::max(worst, lemma1_diagnostic(opts.limit, H, k));
  }
  report.check("lemma1", worst <= 2.0, "max ratio " + fmt(worst));

  if (opts.zeros) {
    const auto table = load_zeros(opts.zeros->string());
    std::vector<double> pos, neg;
    for (int i = 0; i <= 50; ++i) {
      pos.push_back(0.05 * i);
      neg.push_back(-0.05 * i);
    }
    const auto fp = f_alpha(table, table.max_ordinate(), pos, opts.threads);
    const auto fn = f_alpha(table, table.max_ordinate(), neg, opts.threads);
    bool ok = fp.values == fn.values;
    for (double v : fp.values) ok = ok && v >= -1e-9;
    report.check("pair-correlation", ok, std::to_string(table.size()) + " zeros");
    double worst_diff = 0.0;
    bool count_ok = true;
    const double lo = table.ordinates().front(), hi = table.max_ordinate();
    for (int i = 0; i < 20; ++i) {
      const double T = lo * std::pow(hi / lo, i / 19.0);
      const auto zc = zero_count_check(table, std::min(T, hi));
      count_ok = count_ok && std::fabs(zc.diff) <= 3.0 * std::log(T);
      worst_diff = std::max(worst_diff, std::fabs(zc.diff));
    }
    report.check("zero-count", count_ok, "max |N(T) - formula| = " + fmt(worst_diff));
  }

  if (opts.checkpoints) {
    const auto t = CsvTable::read(*opts.checkpoints);
    t.require({"x", "pi", "gstar", "C", "Scal"});
    const auto cx = t.column("x"), cpi = t.column("pi"), cg = t.column("gstar"), cc = t.column("C"),
               cs = t.column("Scal");
    std::vector<std::uint64_t> xs;
    for (std::size_t r = 0; r < t.rows(); ++r) xs.push_back(t.integer(r, cx));
    if (xs.empty()) throw SchemaError(opts.checkpoints->string() + " has no rows");
    const auto fresh = scan_checkpoints(SieveConfig{xs.back()}, CheckpointSchedule(xs), opts.threads);
    std::size_t bad = 0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const auto& s = fresh[r].stats;
      if (t.integer(r, cpi) != s.prime_count() || t.integer(r, cg) != s.max_gap() || t.integer(r, cc) != s.sum_sq() ||
          t.number(r, cs) != s.sum_sq_over_p()) {
        ++bad;
      }
    }
    report.check("checkpoint-file", bad == 0,
                 std::to_string(t.rows()) + " rows, " + std::to_string(bad) + " differ from a fresh scan");
  }
  return report.all();
}

}  // namespace primegaps::cli
