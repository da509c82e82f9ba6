#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace quatinv {

// Dense Gaussian elimination over any exact field type with is_zero(),
// +, -, *, / (LaurentScalar, BaseScalar).
template <class T>
using Matrix = std::vector<std::vector<T>>;

// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    T inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || m[q][c].is_zero()) continue;
      T f = m[q][c];
      for (std::size_t k = c; k < cols; ++k) m[q][k] = m[q][k] - f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return row_reduce(m).size();
}

// Basis of {x : m x = 0}; `zero` and `one` supply the field constants.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, std::size_t cols, const T& zero, const T& one) {
  std::vector<std::size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace quatinv
