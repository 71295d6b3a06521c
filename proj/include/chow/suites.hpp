#pragma once

// Verification suites behind the command-line tool. Each suite expands into
// independent tasks; tasks are dispatched with OpenMP when available and
// the merged report is sorted by check name.

#include "chow/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chow {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Suite { binomial, projbundle, blowup, charclass, flop, all };
enum class Mode { formal, numeric };

Suite parse_suite(const std::string& name);
std::string to_string(Suite s);
Mode parse_mode(const std::string& name);
std::string to_string(Mode m);

struct SuiteConfig {
  Suite suite = Suite::all;
  int r = 2;
  std::optional<int> r_max;  // when set, r runs over 1..r_max
  Mode mode = Mode::formal;
  int trials = 200;
  std::uint64_t seed = 1;
  std::optional<int> dim_bound;  // horizon override for characteristic classes
  std::string format = "text";
  std::string output;              // empty: stdout
  std::vector<std::string> cases;  // blow-up instances: "linear:n,m" or "file:path"
  bool parallel = true;
  bool assert_integral = false;  // blow-up numbers and products must stay in Z
};

/// Throws UsageError on an invalid configuration.
void validate(const SuiteConfig& cfg);

/// Values of r the configuration covers.
std::vector<int> r_values(const SuiteConfig& cfg);

/// Applies flat `key=value` lines (keys mirror the long flags, `#` comments).
void apply_config_text(SuiteConfig& cfg, const std::string& text);
void apply_setting(SuiteConfig& cfg, const std::string& key, const std::string& value);

Report run_suite(const SuiteConfig& cfg);

}  // namespace chow
