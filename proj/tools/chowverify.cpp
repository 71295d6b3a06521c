// chowverify: runs the verification suites and prints a report.
//
//   chowverify verify flop --r 2 --mode formal
//   chowverify --suite binomial --r-max 12 --format json --out report.json
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include "chow/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chow::UsageError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for Chow ring identities"};
  app.set_version_flag("--version", "chowverify 1.0");

  std::vector<std::string> positionals;
  std::string suite, mode, format, out, config;
  int r = 0, r_max = 0, trials = 0, dim_bound = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> cases;
  bool serial = false;
  bool integral = false;

  app.add_option("command", positionals, "'verify <suite>' or just '<suite>'");
  auto* o_suite = app.add_option("--suite", suite, "binomial | projbundle | blowup | charclass | flop | all");
  auto* o_r = app.add_option("--r", r, "single value of r (rank for projbundle)");
  auto* o_rmax = app.add_option("--r-max", r_max, "run r = 1..r-max (binomial: 0..r-max)");
  auto* o_mode = app.add_option("--mode", mode, "formal | numeric");
  auto* o_trials = app.add_option("--trials", trials, "random samples per check");
  auto* o_seed = app.add_option("--seed", seed, "64-bit seed for sampling");
  auto* o_dim = app.add_option("--dim-bound", dim_bound, "degree horizon for characteristic classes");
  auto* o_format = app.add_option("--format", format, "text | json");
  auto* o_out = app.add_option("--out", out, "write the report to this file");
  auto* o_case = app.add_option("--case", cases, "blow-up instance: linear:n,m or file:path (repeatable)");
  auto* o_serial = app.add_flag("--serial", serial, "dispatch checks on one thread");
  auto* o_integral = app.add_flag("--assert-integral", integral, "fail blow-up checks whose pushforwards leave Z");
  app.add_option("--config", config, "flat key=value file; flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  chow::SuiteConfig cfg;
  try {
    if (!config.empty()) chow::apply_config_text(cfg, read_file(config));

    if (!positionals.empty()) {
      std::size_t at = 0;
      if (positionals[0] == "verify") ++at;
      if (positionals.size() - at > 1) throw chow::UsageError("expected at most one suite name");
      if (at < positionals.size()) cfg.suite = chow::parse_suite(positionals[at]);
    }
    if (o_suite->count()) cfg.suite = chow::parse_suite(suite);
    if (o_r->count()) cfg.r = r;
    if (o_rmax->count()) cfg.r_max = r_max;
    if (o_mode->count()) cfg.mode = chow::parse_mode(mode);
    if (o_trials->count()) cfg.trials = trials;
    if (o_seed->count()) cfg.seed = seed;
    if (o_dim->count()) cfg.dim_bound = dim_bound;
    if (o_format->count()) cfg.format = format;
    if (o_out->count()) cfg.output = out;
    if (o_case->count()) cfg.cases = cases;
    if (o_serial->count()) cfg.parallel = !serial;
    if (o_integral->count()) cfg.assert_integral = integral;
    chow::validate(cfg);
  } catch (const chow::UsageError& e) {
    std::cerr << "chowverify: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto report = chow::run_suite(cfg);
  const std::string rendered = cfg.format == "json" ? report.to_json() : report.to_text();
  if (cfg.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      std::cerr << "chowverify: cannot write '" << cfg.output << "'\n";
      return kExitUsage;
    }
    file << rendered;
    std::cerr << (report.all_passed() ? "OK" : "FAILED") << ": " << report.checks().size() - report.failures() << "/"
              << report.checks().size() << " checks passed\n";
  }
  return report.all_passed() ? 0 : kExitFailure;
}
