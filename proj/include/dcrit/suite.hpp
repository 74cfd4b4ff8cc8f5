#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dcrit/check.hpp"
#include "dcrit/poly.hpp"

namespace dcrit {

struct CorpusEntry {
  VarList vars;
  Poly f;
  /// Degree d of f; with unit weights the Milnor number is (d − 1)^n.
  unsigned degree;
};

/// Quasi-homogeneous test corpus: x², x³, x³+y³, x²+y², x⁴+y⁴, x³+y³+z³.
std::vector<CorpusEntry> standard_corpus();

/// Π (d − w_i) / w_i.
std::size_t milnor_orlik(unsigned degree, const std::vector<unsigned>& weights);

struct Criterion {
  int id;
  std::string name;
  double time_limit_seconds;
  std::function<CheckResult(std::uint64_t seed)> run;
};

/// The library-level acceptance criteria (the CLI determinism criterion is
/// exercised by the test harness separately).
const std::vector<Criterion>& acceptance_criteria();

struct CriterionOutcome {
  int id;
  CheckResult result;
  double seconds;
};

std::vector<CriterionOutcome> run_suite(std::uint64_t seed);

}  // namespace dcrit
