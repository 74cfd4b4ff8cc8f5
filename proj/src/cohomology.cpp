#include "dcrit/cohomology.hpp"

#include <algorithm>
#include <map>

#include "dcrit/errors.hpp"
#include "dcrit/linalg.hpp"

namespace dcrit {

SliceWeights resolve_weights(const KoszulComplex& c, std::span<const unsigned> var_weights) {
  if (var_weights.size() != c.vars()->size())
    throw DomainError("weight-assignment inconsistency: " + std::to_string(var_weights.size()) +
                      " weights for " + std::to_string(c.vars()->size()) + " variables");
  for (auto w : var_weights)
    if (w == 0) throw DomainError("weight-assignment inconsistency: weights must be positive");

  SliceWeights out{std::vector<unsigned>(var_weights.begin(), var_weights.end()), {}};
  std::vector<std::optional<unsigned>> degrees;
  unsigned largest = 0;
  for (std::size_t j = 0; j < c.rank(); ++j) {
    const auto& s = c.section().components[j];
    const auto wd = s.weighted_degree(var_weights);
    if (wd.is_inhomogeneous())
      throw DomainError("inhomogeneous section: component " + std::to_string(j + 1) + " = " + s.to_string());
    if (wd.is_any()) {
      degrees.emplace_back();
    } else {
      degrees.emplace_back(static_cast<unsigned>(wd.value));
      largest = std::max(largest, static_cast<unsigned>(wd.value));
    }
  }
  for (const auto& d : degrees) out.generator_weights.push_back(d.value_or(largest ? largest : 1));
  return out;
}

WeightSlice slice_basis(const KoszulComplex& c, const SliceWeights& w, int degree, unsigned weight) {
  WeightSlice slice{degree, weight, {}};
  for (Mask s : c.basis(degree)) {
    unsigned gen_weight = 0;
    for (auto j : mask_indices(s)) gen_weight += w.generator_weights[j];
    if (gen_weight > weight) continue;
    for (auto& e : monomials_of_weight(w.var_weights, weight - gen_weight)) slice.basis.emplace_back(std::move(e), s);
  }
  return slice;
}

namespace {

// Rank of d restricted to `source` → `target` (both at the same weight).
std::size_t slice_rank(const KoszulComplex& c, const WeightSlice& source, const WeightSlice& target) {
  if (source.dimension() == 0 || target.dimension() == 0) return 0;
  std::map<std::pair<Mask, Exponents>, std::size_t> index;
  for (std::size_t i = 0; i < target.basis.size(); ++i)
    index.emplace(std::make_pair(target.basis[i].second, target.basis[i].first), i);

  // Rows of the sparse matrix are source basis vectors (rank is transpose-invariant).
  SparseMatrix m(source.dimension(), target.dimension());
  const auto& section = c.section().components;
  Exponents prod;
  for (std::size_t col = 0; col < source.basis.size(); ++col) {
    const auto& [mono, mask] = source.basis[col];
    int k = 0;
    for (auto i : mask_indices(mask)) {
      ++k;
      const Mask rest = mask & ~(Mask{1} << i);
      for (const auto& [e, coeff] : section[i].terms()) {
        prod.resize(e.size());
        for (std::size_t v = 0; v < e.size(); ++v) prod[v] = e[v] + mono[v];
        auto it = index.find(std::make_pair(rest, prod));
        if (it == index.end()) throw DomainError("differential leaves the weight slice");
        m.data[col].emplace_back(static_cast<std::uint32_t>(it->second), (k & 1) ? Rational(-coeff) : coeff);
      }
    }
  }
  m.normalize();
  return exact_rank(m);
}

}  // namespace

long SliceCohomology::euler_defect() const {
  long defect = 0;
  for (std::size_t k = 0; k < chain_dims.size(); ++k) {
    const long sign = (k & 1) ? -1 : 1;
    defect += sign * (static_cast<long>(chain_dims[k]) - static_cast<long>(cohomology_dims[k]));
  }
  return defect;
}

SliceCohomology slice_cohomology(const KoszulComplex& c, std::span<const unsigned> var_weights, unsigned weight) {
  return slice_cohomology(c, resolve_weights(c, var_weights), weight);
}

SliceCohomology slice_cohomology(const KoszulComplex& c, const SliceWeights& w, unsigned weight) {
  const std::size_t m = c.rank();
  std::vector<WeightSlice> slices;
  for (std::size_t k = 0; k <= m; ++k) slices.push_back(slice_basis(c, w, -static_cast<int>(k), weight));

  // out_rank[k] = rank of d leaving degree −k (into degree −k+1).
  std::vector<std::size_t> out_rank(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) out_rank[k] = slice_rank(c, slices[k], slices[k - 1]);

  SliceCohomology result{weight, {}, {}};
  for (std::size_t k = 0; k <= m; ++k) {
    const std::size_t dim = slices[k].dimension();
    const std::size_t incoming = k < m ? out_rank[k + 1] : 0;
    result.chain_dims.push_back(dim);
    result.cohomology_dims.push_back(dim - out_rank[k] - incoming);
  }
  return result;
}

std::size_t HilbertTable::total(int degree) const {
  std::size_t sum = 0;
  for (auto d : row(degree)) sum += d;
  return sum;
}

HilbertTable hilbert_table(const KoszulComplex& c, std::span<const unsigned> var_weights, unsigned cutoff) {
  const auto w = resolve_weights(c, var_weights);
  HilbertTable t;
  t.cutoff = cutoff;
  t.lowest_degree = c.lowest_degree();
  t.rows.assign(c.rank() + 1, std::vector<std::size_t>(cutoff + 1, 0));
  for (unsigned weight = 0; weight <= cutoff; ++weight) {
    const auto sc = slice_cohomology(c, w, weight);
    if (sc.euler_defect() != 0) t.euler_consistent = false;
    for (std::size_t k = 0; k <= c.rank(); ++k) t.rows[k][weight] = sc.cohomology_dims[k];
  }
  for (const auto& row : t.rows) t.vanishes_at_cutoff.push_back(row.back() == 0);
  return t;
}

HilbertTable hilbert_table(const FancyKoszul& f, unsigned cutoff) {
  const std::vector<unsigned> unit(f.vars()->size(), 1);
  return hilbert_table(f.complex(), unit, cutoff);
}

RegularityVerdict is_regular_sequence(const KoszulComplex& c, std::span<const unsigned> var_weights, unsigned cutoff) {
  const auto w = resolve_weights(c, var_weights);
  RegularityVerdict v{true, cutoff, std::nullopt};
  for (unsigned weight = 0; weight <= cutoff && v.regular; ++weight) {
    const auto sc = slice_cohomology(c, w, weight);
    for (std::size_t k = 1; k <= c.rank(); ++k) {
      if (sc.cohomology_dims[k] != 0) {
        v.regular = false;
        v.witness = std::make_pair(-static_cast<int>(k), weight);
        break;
      }
    }
  }
  return v;
}

}  // namespace dcrit
