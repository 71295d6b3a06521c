#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chow/report.hpp"
#include "chow/suites.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace chow;

namespace {

int run_tool(const std::string& args) {
  const std::string cmd = std::string(CHOWVERIFY_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("chowverify_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("report rendering") {
  Report rep;
  rep.add(run_check("b.second", "anchor-b", [] { return std::optional<std::string>{}; }));
  rep.add(run_check("a.first", "anchor-a", []() -> std::optional<std::string> { return "broken"; }));
  rep.add(run_check("c.third", "anchor-c", []() -> std::optional<std::string> { throw std::runtime_error("boom"); }));
  rep.set_meta("suite", "demo");
  rep.finalize();
  CHECK(rep.checks()[0].name == "a.first");
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.failures() == 2);
  CHECK(rep.checks()[2].witness.find("boom") != std::string::npos);

  const auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["total"] == 3);
  CHECK(j["failed"] == 2);
  CHECK(j["passed"] == false);
  CHECK(j["meta"]["suite"] == "demo");
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][0]["witness"] == "broken");
  CHECK(j["checks"][1]["paper_anchor"] == "anchor-b");
  CHECK(j["checks"][1].contains("millis"));
  CHECK_FALSE(nlohmann::json::parse(rep.to_json(false))["checks"][1].contains("millis"));
  CHECK(rep.to_text().find("FAIL a.first") != std::string::npos);

  CHECK(clip_witness(std::string(5000, 'x')).size() < 4100);
  CHECK(clip_witness("short") == "short");
}

TEST_CASE("suite and mode names") {
  for (auto s : {Suite::binomial, Suite::projbundle, Suite::blowup, Suite::charclass, Suite::flop, Suite::all}) {
    CHECK(parse_suite(to_string(s)) == s);
  }
  CHECK(parse_mode("numeric") == Mode::numeric);
  CHECK_THROWS_AS(parse_suite("everything"), UsageError);
  CHECK_THROWS_AS(parse_mode("fuzzy"), UsageError);
}

TEST_CASE("configuration text") {
  SuiteConfig cfg;
  apply_config_text(cfg, "# comment\nsuite = flop\nr_max = 3\nmode=numeric\ntrials = 12\nseed = 9\ncase = linear:3,1\n");
  CHECK(cfg.suite == Suite::flop);
  CHECK(cfg.r_max == 3);
  CHECK(cfg.mode == Mode::numeric);
  CHECK(cfg.trials == 12);
  CHECK(cfg.seed == 9);
  CHECK(cfg.cases == std::vector<std::string>{"linear:3,1"});
  CHECK_FALSE(cfg.assert_integral);
  apply_setting(cfg, "assert_integral", "true");
  CHECK(cfg.assert_integral);
  CHECK(r_values(cfg) == std::vector<int>{1, 2, 3});

  SuiteConfig bad;
  CHECK_THROWS_AS(apply_config_text(bad, "colour = blue\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(bad, "r = two\n"), UsageError);
  CHECK_THROWS_AS(apply_config_text(bad, "just words\n"), UsageError);
}

TEST_CASE("validation of configurations") {
  SuiteConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.r = 0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg.r = 2;
  cfg.trials = -1;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg.trials = 5;
  cfg.format = "yaml";
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg.format = "json";
  cfg.cases = {"linear:2,5"};
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg.cases = {"file:/nonexistent/embedding.txt"};
  CHECK_THROWS_AS(validate(cfg), UsageError);
}

TEST_CASE("exit codes of the command-line tool") {
  CHECK(run_tool("--version") == 0);
  CHECK(run_tool("verify binomial --r-max 6") == 0);
  CHECK(run_tool("flop --r 2 --format json") == 0);
  CHECK(run_tool("verify flop --mode numeric --trials 5 --r 1") == 0);
  CHECK(run_tool("blowup --case linear:3,1 --trials 5 --serial") == 0);
  CHECK(run_tool("blowup --case linear:4,1 --trials 5 --assert-integral") == 0);
  CHECK(run_tool("verify nosuch") == 2);
  CHECK(run_tool("flop --r 0") == 2);
  CHECK(run_tool("--bogus-flag") == 2);
  CHECK(run_tool("blowup --case linear:1,3") == 2);
  CHECK(run_tool("verify flop extra") == 2);

  // An embedding that breaks the self-intersection formula is a failed check, not a usage error.
  const auto broken = scratch("broken.txt");
  std::ofstream(broken) << "ambient.generators = t:1\nambient.dim_bound = 4\ncenter.generators = u:1\n"
                           "center.dim_bound = 2\ncodim = 2\npull.t = u\npush[1] = 2*t^2\npush[u] = 2*t^3\n"
                           "push[u^2] = 2*t^4\nnormal.c1 = 2*u\nnormal.c2 = u^2\n";
  CHECK(run_tool("blowup --trials 3 --case file:" + broken.string()) == 1);
  std::filesystem::remove(broken);
}

TEST_CASE("JSON output file and config override") {
  const auto out = scratch("report.json");
  const auto conf = scratch("conf.txt");
  std::ofstream(conf) << "suite = binomial\nr-max = 3\nformat = text\n";
  CHECK(run_tool("--config " + conf.string() + " --format json --out " + out.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["passed"] == true);
  CHECK(j["meta"]["suite"] == "binomial");
  CHECK(j["total"] == 4);
  std::filesystem::remove(out);
  std::filesystem::remove(conf);
}
