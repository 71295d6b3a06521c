#pragma once

// Check results and their text/JSON rendering. Reports are sorted by check
// name so output is deterministic apart from the timing fields.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chow {

struct CheckResult {
  std::string name;
  std::string paper_anchor;
  bool passed = true;
  std::string witness;  // empty when passed
  double millis = 0.0;
};

/// Runs `body`; a returned string is a failure witness, std::nullopt a pass.
/// Exceptions become failures whose witness is the exception message.
CheckResult run_check(std::string name, std::string anchor,
                      const std::function<std::optional<std::string>()>& body);

/// Shortens long witnesses so a single failure cannot flood the report.
std::string clip_witness(std::string text, std::size_t limit = 4000);

class Report {
 public:
  Report() = default;

  void add(CheckResult result) { checks_.push_back(std::move(result)); }
  void merge(std::vector<CheckResult> results);
  void merge(const Report& other) { merge(other.checks_); }
  void set_meta(std::string key, std::string value);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_passed() const;
  std::size_t failures() const;

  /// Sorts by name; call before rendering.
  void finalize();

  std::string to_json(bool include_timing = true) const;
  std::string to_text() const;

 private:
  std::vector<CheckResult> checks_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

}  // namespace chow
