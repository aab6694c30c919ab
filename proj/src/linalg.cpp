#include "wdm/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace wdm {

namespace {

void divide_exact(Integer& x, const Integer& d) {
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) throw std::logic_error("inexact division in fraction-free elimination");
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

/// Fraction-free forward elimination. With `full` set, rows above the pivot
/// are reduced too, which leaves every pivot equal to the last one.
std::vector<std::size_t> bareiss(IntMatrix& a, bool full, Integer& last_pivot) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer t;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(rank, p);
    const Integer pivot = a(rank, c);
    for (std::size_t i = full ? 0 : rank + 1; i < a.rows(); ++i) {
      if (i == rank) continue;
      const Integer factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        Integer& x = a(i, j);
        x *= pivot;
        if (factor != 0 && a(rank, j) != 0) {
          t = factor * a(rank, j);
          x -= t;
        }
        divide_exact(x, prev);
      }
      if (full) {
        for (std::size_t j = 0; j < c; ++j) {
          if (a(i, j) == 0) continue;
          a(i, j) *= pivot;
          divide_exact(a(i, j), prev);
        }
      }
    }
    prev = pivot;
    pivots.push_back(c);
    ++rank;
  }
  last_pivot = prev;
  return pivots;
}

}  // namespace

std::vector<Integer> IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Integer> out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j] != 0) out[i] += rows_[i][j] * x[j];
    }
  }
  return out;
}

IntegerKernel integer_kernel(IntMatrix a) {
  Integer D;
  IntegerKernel out;
  out.pivot_columns = bareiss(a, true, D);
  out.rank = out.pivot_columns.size();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Integer> v(a.cols());
    v[j] = D;
    for (std::size_t i = 0; i < out.rank; ++i) {
      if (out.pivot_columns[i] < j) v[out.pivot_columns[i]] = -a(i, j);
    }
    Integer g = 0;
    for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (Integer& x : v) divide_exact(x, g);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
  if (a.rows() == 0) return 1;
  const std::size_t n = a.rows();
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        divide_exact(x, prev);
        a(i, j) = std::move(x);
      }
    }
    prev = a(k, k);
  }
  return sign * prev;
}

std::size_t integer_rank(IntMatrix a) {
  Integer last;
  return bareiss(a, false, last).size();
}

}  // namespace wdm
