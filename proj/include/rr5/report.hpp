#pragma once

// Named pass/fail results collected by the verification routines.

#include <string>
#include <vector>

namespace rr5 {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
  /// One line per check: "PASS name  detail".
  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.ok ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.detail.empty()) out += "  " + c.detail;
      out += '\n';
    }
    return out;
  }
};

}  // namespace rr5
