#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dcrit/exterior.hpp"
#include "dcrit/poly.hpp"

namespace dcrit {

/// Seeded generator. Draws are reduced with plain modular arithmetic so
/// that a seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Variables x, y, z for n <= 3, otherwise x1..xn.
VarList standard_vars(std::size_t n);

/// Up to `max_terms` terms, monomial degree <= max_deg, integer
/// coefficients in [-bound, bound] \ {0}. May be zero when min_terms is 0.
Poly random_poly(Rng& rng, const VarList& vars, unsigned max_deg, unsigned max_terms, int bound = 3,
                 unsigned min_terms = 1);

/// Homogeneous element of degree `degree` (= −arity).
ExtElt random_homogeneous(Rng& rng, const AmbientPtr& ambient, int degree, unsigned max_deg, unsigned max_terms);

/// Element with terms in arbitrary exterior degrees.
ExtElt random_element(Rng& rng, const AmbientPtr& ambient, unsigned max_deg, unsigned max_terms);

Section random_section(Rng& rng, const VarList& vars, std::size_t m, unsigned max_deg, unsigned max_terms);

/// Splits an element into single (mask, monomial) terms.
std::vector<ExtElt> split_terms(const ExtElt& a);

/// Greedy term deletion: repeatedly removes single terms from the inputs
/// while `fails` still reports failure.
template <typename Pred>
std::vector<ExtElt> minimize_counterexample(std::vector<ExtElt> inputs, Pred fails) {
  for (std::size_t which = 0; which < inputs.size(); ++which) {
    bool changed = true;
    while (changed) {
      changed = false;
      const auto parts = split_terms(inputs[which]);
      if (parts.size() <= 1) break;
      for (std::size_t drop = 0; drop < parts.size(); ++drop) {
        ExtElt candidate = inputs[which] - parts[drop];
        auto trial = inputs;
        trial[which] = candidate;
        if (fails(trial)) {
          inputs = std::move(trial);
          changed = true;
          break;
        }
      }
    }
  }
  return inputs;
}

}  // namespace dcrit
