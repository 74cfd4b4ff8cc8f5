#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dcrit/poly.hpp"

namespace dcrit {

/// Dense matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(VarList vars, std::size_t rows, std::size_t cols)
      : vars_(vars), rows_(rows), cols_(cols), entries_(rows * cols, Poly(vars)) {}

  const VarList& vars() const { return vars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  PolyMatrix transpose() const {
    PolyMatrix t(vars_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix p(a.vars_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& lhs = a.at(r, k);
        if (lhs.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c)
          if (!b.at(k, c).is_zero()) p.at(r, c) += lhs * b.at(k, c);
      }
    return p;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(at(r, c).to_string());
    return out;
  }

 private:
  VarList vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

}  // namespace dcrit
