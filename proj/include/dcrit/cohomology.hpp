#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcrit/exterior.hpp"
#include "dcrit/koszul.hpp"

namespace dcrit {

/// Weights making the Koszul differential weight-preserving: one per ring
/// variable, and one per generator e_j∨ equal to the weighted degree of s_j.
struct SliceWeights {
  std::vector<unsigned> var_weights;
  std::vector<unsigned> generator_weights;
};

/// Checks that every section component is quasi-homogeneous and assigns
/// generator weights. A zero component takes the largest weighted degree
/// among the nonzero components, or 1 when the whole section is zero.
SliceWeights resolve_weights(const KoszulComplex& c, std::span<const unsigned> var_weights);

WeightSlice slice_basis(const KoszulComplex& c, const SliceWeights& w, int degree, unsigned weight);

/// Dimensions at one weight, indexed by k = −degree (k = 0..m).
struct SliceCohomology {
  unsigned weight = 0;
  std::vector<std::size_t> chain_dims;
  std::vector<std::size_t> cohomology_dims;

  std::size_t chain(int degree) const { return chain_dims.at(static_cast<std::size_t>(-degree)); }
  std::size_t h(int degree) const { return cohomology_dims.at(static_cast<std::size_t>(-degree)); }
  /// Σ_p (−1)^p dim C^p − Σ_p (−1)^p dim H^p; always zero.
  long euler_defect() const;
};

SliceCohomology slice_cohomology(const KoszulComplex& c, std::span<const unsigned> var_weights, unsigned weight);
SliceCohomology slice_cohomology(const KoszulComplex& c, const SliceWeights& w, unsigned weight);

struct HilbertTable {
  unsigned cutoff = 0;
  int lowest_degree = 0;
  /// rows[k][w] = dim H^{−k} in weight w.
  std::vector<std::vector<std::size_t>> rows;
  /// rows[k][cutoff] == 0.
  std::vector<bool> vanishes_at_cutoff;
  /// Per-weight Euler defects were all zero.
  bool euler_consistent = true;

  const std::vector<std::size_t>& row(int degree) const { return rows.at(static_cast<std::size_t>(-degree)); }
  std::size_t total(int degree) const;
};

HilbertTable hilbert_table(const KoszulComplex& c, std::span<const unsigned> var_weights, unsigned cutoff);

/// Unit weights on the base variables and the fiber variables.
HilbertTable hilbert_table(const FancyKoszul& f, unsigned cutoff);

struct RegularityVerdict {
  bool regular = false;
  unsigned certified_up_to = 0;
  /// First nonvanishing negative-degree slice (degree, weight).
  std::optional<std::pair<int, unsigned>> witness;

  std::string caveat() const {
    return "verdict certified only for weights <= " + std::to_string(certified_up_to);
  }
};

RegularityVerdict is_regular_sequence(const KoszulComplex& c, std::span<const unsigned> var_weights, unsigned cutoff);

}  // namespace dcrit
