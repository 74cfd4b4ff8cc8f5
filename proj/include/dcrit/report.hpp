#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcrit/check.hpp"

namespace dcrit {

inline constexpr const char* kVersion = "0.1.0";

struct PairingSummary {
  std::vector<std::vector<std::string>> hessian;
  bool symmetric = false;
  bool nondegenerate = false;

  friend bool operator==(const PairingSummary&, const PairingSummary&) = default;
};

/// Everything a CLI command prints. Serialized with stable keys:
///   {"command", "inputs", "results": {"hilbert", "milnor", "pairing",
///    "checks", ...}, "version", "timing"?}
struct Report {
  std::string command;
  std::map<std::string, std::string> inputs;
  /// degree → dims per weight.
  std::optional<std::map<int, std::vector<std::size_t>>> hilbert;
  std::optional<std::string> milnor;
  std::optional<PairingSummary> pairing;
  std::vector<CheckResult> checks;
  /// Command-specific results (ranks, obstruction data, …).
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  std::optional<std::map<std::string, double>> timing;
  std::string version = kVersion;

  bool all_passed() const;
};

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

/// Human-readable rendering.
std::string to_text(const Report& r);

bool operator==(const CheckResult& a, const CheckResult& b);
bool operator==(const Report& a, const Report& b);

}  // namespace dcrit
