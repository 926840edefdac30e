#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "primegaps/errors.hpp"

namespace {

using namespace primegaps;
using namespace primegaps::cli;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void add_run_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--limit", cfg.limit, "Sieve limit (>= 100)")->capture_default_str();
  cmd.add_option("--segment-length", cfg.segment_length, "Integers per sieve segment")->capture_default_str();
  cmd.add_option("--threads", cfg.threads, "Worker threads, 0 = all cores")->capture_default_str();
  cmd.add_option("--out", cfg.output_dir, "Output directory")->capture_default_str();
}

std::vector<std::vector<std::uint64_t>> parse_tuples(const std::vector<std::string>& specs) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& s : specs) {
    std::vector<std::uint64_t> offs;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        offs.push_back(std::stoull(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw UsageError("bad tuple offset '" + item + "' in '" + s + "'");
      }
    }
    out.push_back(std::move(offs));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime gap statistics at desk scale"};
  app.require_subcommand(1);

  RunConfig cfg;

  auto* scan = app.add_subcommand("scan", "Sieve and write checkpoint, histogram and tail-model files");
  add_run_options(*scan, cfg);
  scan->add_option("--ratio", cfg.ratio, "Geometric checkpoint ratio")->capture_default_str();
  scan->add_option("--start", cfg.start, "First geometric checkpoint")->capture_default_str();
  scan->add_option("--lambda", cfg.lambdas, "Tail-model lambdas (H = lambda log x)")->capture_default_str();

  std::vector<std::string> figure_ids;
  bool figures_scan = false;
  auto* figures = app.add_subcommand("figures", "Emit figure data from a scan directory");
  add_run_options(*figures, cfg);
  figures->add_option("--ratio", cfg.ratio, "Geometric checkpoint ratio (with --scan)")->capture_default_str();
  figures->add_option("--id", figure_ids, "Figures to emit (default all)");
  figures->add_flag("--scan", figures_scan, "Run the scan into --out first");

  std::uint64_t max_d = 1000;
  auto* singular = app.add_subcommand("singular", "Write the pair singular series S(d)");
  singular->add_option("--max-d", max_d, "Largest d")->capture_default_str();
  singular->add_option("--out", cfg.output_dir, "Output directory")->capture_default_str();

  std::vector<std::string> tuple_specs{"0,2", "0,2,6", "0,4,6"};
  auto* tuples = app.add_subcommand("tuples", "Count prime tuples against the singular-series prediction");
  add_run_options(*tuples, cfg);
  tuples->add_option("--tuple", tuple_specs, "Comma-separated offsets, repeatable")->capture_default_str();

  auto* moments = app.add_subcommand("moments", "Second and fourth moments of primes in short intervals");
  add_run_options(*moments, cfg);

  std::string zeros;
  std::optional<double> height;
  double alpha_step = 0.05, alpha_max = 2.5;
  auto* falpha = app.add_subcommand("f-alpha", "Pair correlation F(alpha) from a table of zeta zeros");
  falpha->add_option("--zeros", zeros, "Zero ordinates, one per line")->required();
  falpha->add_option("--height", height, "T (default: largest ordinate)");
  falpha->add_option("--alpha-step", alpha_step)->capture_default_str();
  falpha->add_option("--alpha-max", alpha_max)->capture_default_str();
  falpha->add_option("--out", cfg.output_dir, "Output directory")->capture_default_str();
  falpha->add_option("--threads", cfg.threads)->capture_default_str();

  VerifyOptions vopts;
  std::string verify_checkpoints;
  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("--limit", vopts.limit, "Scan limit for the checks")->capture_default_str();
  verify->add_option("--zeros", zeros, "Also check pair correlation on this zero table");
  verify->add_option("--checkpoints", verify_checkpoints, "Also validate this checkpoints.csv");
  verify->add_option("--threads", vopts.threads)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*scan) {
      const auto cps = cmd_scan(cfg);
      std::cout << "wrote " << cps.size() << " checkpoints to " << cfg.output_dir.string() << '\n';
    } else if (*figures) {
      if (figures_scan) cmd_scan(cfg);
      std::vector<FigureId> ids;
      for (const auto& name : figure_ids) ids.push_back(parse_figure(name));
      if (ids.empty()) ids.assign(std::begin(kAllFigures), std::end(kAllFigures));
      for (const auto& p : cmd_figures(cfg.output_dir, ids)) std::cout << "wrote " << p.string() << '\n';
    } else if (*singular) {
      std::cout << "wrote " << cmd_singular(cfg.output_dir, max_d).string() << '\n';
    } else if (*tuples) {
      std::cout << "wrote " << cmd_tuples(cfg, parse_tuples(tuple_specs)).string() << '\n';
    } else if (*moments) {
      std::cout << "wrote " << cmd_moments(cfg).string() << '\n';
    } else if (*falpha) {
      std::cout << "wrote "
                << cmd_f_alpha(zeros, height, alpha_step, alpha_max, cfg.output_dir, cfg.threads).string()
                << '\n';
    } else if (*verify) {
      if (!zeros.empty()) vopts.zeros = zeros;
      if (!verify_checkpoints.empty()) vopts.checkpoints = verify_checkpoints;
      return cmd_verify(vopts, std::cout) ? kExitOk : kExitCheckFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
