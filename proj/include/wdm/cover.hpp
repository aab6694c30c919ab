#pragma once

#include <string>
#include <vector>

#include "wdm/errors.hpp"
#include "wdm/polynomial.hpp"

namespace wdm {

/// F = F_top + F_0 in variables (Y, X1, ..., Xn) with Y of weight e:
/// F_top = Y^d + sum_i Y^(d-i) f_i(X) with f_i homogeneous of degree e*i, and
/// F_0 of weighted degree < d*e. Fields are kept consistent by split_cover_form.
struct CoverPolynomial {
  std::size_t n = 0;
  std::uint32_t d = 0;
  std::uint32_t e = 1;
  IntPolynomial top;
  IntPolynomial rest;

  IntPolynomial full() const { return top + rest; }
  WeightVector weights() const { return WeightVector::cover(e, n); }
  /// Coefficients of Y^0..Y^d of F as polynomials in (Y, X) with Y absent.
  std::vector<IntPolynomial> fiber_coefficients() const;
};

/// Splits F at its weighted degree under (e, 1, ..., 1) and validates the
/// cover invariants. With require_cover set, d < 2 is rejected.
CoverPolynomial split_cover_form(const IntPolynomial& F, std::size_t n, std::uint32_t e, bool require_cover = true);

/// Throws HypothesisError naming the first broken invariant.
void validate_cover(const CoverPolynomial& F);

/// Substitutes X_n = a_1 X_1 + ... + a_{n-1} X_{n-1} + k; needs n >= 3.
CoverPolynomial slice_hyperplane(const CoverPolynomial& F, const std::vector<Integer>& a, const Integer& k);

}  // namespace wdm
