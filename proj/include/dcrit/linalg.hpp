#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dcrit/rational.hpp"

namespace dcrit {

/// Row-sparse matrix over Q. Each row is sorted by column, no zeros stored.
struct SparseMatrix {
  using Row = std::vector<std::pair<std::uint32_t, Rational>>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Row> data;

  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}

  /// Adds v to entry (r, c). Rows must be built in increasing column order
  /// or finalized with `normalize()`.
  void add(std::size_t r, std::size_t c, const Rational& v);
  void normalize();
};

/// Exact rank by Gaussian elimination over Q.
std::size_t exact_rank(const SparseMatrix& m);

}  // namespace dcrit
