#include "dcrit/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace dcrit {

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (v == 0) return;
  auto& row = data[r];
  const auto col = static_cast<std::uint32_t>(c);
  if (!row.empty() && row.back().first == col) {
    row.back().second += v;
    if (row.back().second == 0) row.pop_back();
  } else {
    row.emplace_back(col, v);
  }
}

void SparseMatrix::normalize() {
  for (auto& row : data) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row merged;
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c) {
        merged.back().second += v;
      } else {
        merged.emplace_back(c, v);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    row = std::move(merged);
  }
}

namespace {

// out = a - f * b, both sorted.
void axpy(const SparseMatrix::Row& a, const Rational& f, const SparseMatrix::Row& b, SparseMatrix::Row& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
}

}  // namespace

std::size_t exact_rank(const SparseMatrix& m) {
  // Pivot rows keyed by leading column; each pivot row is scaled to lead 1.
  // Shorter rows are inserted first to limit fill-in.
  std::vector<std::size_t> order(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return m.data[a].size() < m.data[b].size(); });

  std::unordered_map<std::uint32_t, SparseMatrix::Row> pivots;
  SparseMatrix::Row row, scratch;
  for (std::size_t idx : order) {
    row = m.data[idx];
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const Rational f = row.front().second;
      axpy(row, f, it->second, scratch);
      std::swap(row, scratch);
    }
    if (row.empty()) continue;
    const Rational lead = row.front().second;
    if (lead != 1) {
      const Rational inv = 1 / lead;
      for (auto& [c, v] : row) v *= inv;
    }
    const auto key = row.front().first;
    pivots.emplace(key, std::move(row));
    row = {};
  }
  return pivots.size();
}

}  // namespace dcrit
