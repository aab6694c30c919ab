#pragma once

#include <map>
#include <vector>

#include "wdm/polynomial.hpp"

namespace wdm {

/// f split into weighted-homogeneous parts f_i of weighted degree exactly i.
struct GradedDecomposition {
  WeightVector weights;
  std::map<std::uint64_t, IntPolynomial> parts;

  IntPolynomial sum() const;
};

struct GradingInfo {
  std::uint64_t weighted_degree = 0;
  bool is_homogeneous = false;
  /// lcm(w) divides the weighted degree.
  bool is_full = false;
  GradedDecomposition parts;
};

/// Throws std::domain_error on the zero polynomial and std::invalid_argument
/// on an arity mismatch.
GradingInfo analyze_grading(const IntPolynomial& f, const WeightVector& w);

bool is_weighted_homogeneous(const IntPolynomial& f, const WeightVector& w);

struct Homogenized {
  IntPolynomial poly;
  WeightVector weights;
};

/// Adjoins X0 of weight 1 at index 0: F = sum_i f_i X0^(d-i).
Homogenized homogenize(const IntPolynomial& f, const WeightVector& w);

/// F_H = sum_i H^i f_i X0^(d-i), weighted homogeneous of degree d under (1, w).
IntPolynomial ev_lift(const IntPolynomial& f, const WeightVector& w, const Integer& H);

struct CoordShift {
  /// a_0, ..., a_{n-1}, each in {0, ..., d}.
  std::vector<std::uint32_t> shift;
  /// f(a_0, ..., a_{n-1}, 1), which is also the coefficient of x_n^d in g.
  Integer value;
  /// g(x) = f(x_0 + a_0 x_n^{w_0}, ..., x_{n-1} + a_{n-1} x_n^{w_{n-1}}, x_n).
  IntPolynomial poly;
};

/// Scans a in {0..d}^n lexicographically for the first shift with
/// |f(a, 1)| * 3^(n d) >= ||f||. Requires f primitive and weighted homogeneous
/// of degree d with last weight 1; throws std::domain_error if no shift
/// qualifies.
CoordShift coord_shift_search(const IntPolynomial& f, const WeightVector& w, std::uint64_t d);

}  // namespace wdm
