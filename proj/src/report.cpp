#include "chow/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>

namespace chow {

CheckResult run_check(std::string name, std::string anchor,
                      const std::function<std::optional<std::string>()>& body) {
  CheckResult out{std::move(name), std::move(anchor), true, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    if (auto witness = body()) {
      out.passed = false;
      out.witness = clip_witness(std::move(*witness));
    }
  } catch (const std::exception& e) {
    out.passed = false;
    out.witness = std::string("exception: ") + e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string clip_witness(std::string text, std::size_t limit) {
  if (text.size() <= limit) return text;
  const auto total = text.size();
  text.resize(limit);
  return text + " ... [" + std::to_string(total - limit) + " more characters]";
}

void Report::merge(std::vector<CheckResult> results) {
  for (auto& r : results) checks_.push_back(std::move(r));
}

void Report::set_meta(std::string key, std::string value) {
  for (auto& [k, v] : meta_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta_.emplace_back(std::move(key), std::move(value));
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

void Report::finalize() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

std::string Report::to_json(bool include_timing) const {
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta_) meta[k] = v;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["paper_anchor"] = c.paper_anchor;
    item["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) item["witness"] = c.witness;
    if (include_timing) item["millis"] = c.millis;
    checks.push_back(std::move(item));
  }
  nlohmann::ordered_json root;
  root["meta"] = std::move(meta);
  root["passed"] = all_passed();
  root["total"] = checks_.size();
  root["failed"] = failures();
  root["checks"] = std::move(checks);
  return root.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& [k, v] : meta_) out << "# " << k << ": " << v << "\n";
  for (const auto& c : checks_) {
    char millis[32];
    std::snprintf(millis, sizeof millis, "%.1f", c.millis);
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.paper_anchor << "] " << millis << " ms\n";
    if (!c.passed) out << "     witness: " << c.witness << "\n";
  }
  out << (all_passed() ? "OK" : "FAILED") << ": " << checks_.size() - failures() << "/" << checks_.size()
      << " checks passed\n";
  return out.str();
}

}  // namespace chow
