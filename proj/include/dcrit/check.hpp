#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dcrit {

enum class Status { Pass, Fail, Error };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

/// Outcome of one named property check. Informational checks record an
/// observation and never affect the overall verdict.
struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::optional<std::string> counterexample;
  std::string detail;
  bool informational = false;

  bool passed() const { return informational || status == Status::Pass; }
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace dcrit
