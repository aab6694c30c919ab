#pragma once

#include <span>
#include <vector>

#include "wdm/field.hpp"
#include "wdm/integer.hpp"

namespace wdm {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, std::vector<Integer>(cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  std::span<Integer> row(std::size_t i) { return rows_[i]; }
  std::span<const Integer> row(std::size_t i) const { return rows_[i]; }
  void swap_rows(std::size_t i, std::size_t j) { rows_[i].swap(rows_[j]); }

  std::vector<Integer> apply(std::span<const Integer> x) const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Integer>> rows_;
};

struct IntegerKernel {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  /// One primitive vector per free column, in increasing column order. The
  /// vector for free column j has its last nonzero entry at j.
  std::vector<std::vector<Integer>> basis;
};

/// Right kernel over Q by fraction-free Gauss-Jordan elimination; every
/// division is checked to be exact.
IntegerKernel integer_kernel(IntMatrix a);

/// Bareiss determinant of a square matrix.
Integer determinant(IntMatrix a);

/// Rank over Q by fraction-free elimination.
std::size_t integer_rank(IntMatrix a);

/// Rank of a matrix with entries in `field`.
template <class Field>
std::size_t field_rank(const Field& field, std::vector<std::vector<typename Field::Element>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && field.is_zero(a[pivot][c])) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    const auto inv = field.inv(a[rank][c]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (field.is_zero(a[i][c])) continue;
      const auto factor = field.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = field.sub(a[i][j], field.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace wdm
