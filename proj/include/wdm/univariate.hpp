#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wdm/field.hpp"
#include "wdm/integer.hpp"
#include "wdm/polynomial.hpp"

namespace wdm {

/// Dense univariate polynomial over a field, coefficients from degree 0 up,
/// with no trailing zeros (the zero polynomial is empty).
template <class Field>
using UPoly = std::vector<typename Field::Element>;

template <class Field>
void upoly_trim(const Field& field, UPoly<Field>& a) {
  while (!a.empty() && field.is_zero(a.back())) a.pop_back();
}

/// Degree, or -1 for zero.
template <class Field>
long upoly_degree(const UPoly<Field>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class Field>
UPoly<Field> upoly_derivative(const Field& field, const UPoly<Field>& a) {
  UPoly<Field> out;
  for (std::size_t i = 1; i < a.size(); ++i) {
    typename Field::Element k = field.from(Integer(static_cast<unsigned long>(i)));
    out.push_back(field.mul(k, a[i]));
  }
  upoly_trim(field, out);
  return out;
}

template <class Field>
typename Field::Element upoly_eval(const Field& field, const UPoly<Field>& a, const typename Field::Element& x) {
  typename Field::Element acc = field.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = field.add(field.mul(acc, x), a[i]);
  return acc;
}

/// Remainder of a modulo nonzero b.
template <class Field>
UPoly<Field> upoly_rem(const Field& field, UPoly<Field> a, const UPoly<Field>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const auto lead_inv = field.inv(b.back());
  while (a.size() >= b.size()) {
    const auto factor = field.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = field.sub(a[shift + i], field.mul(factor, b[i]));
    a.pop_back();
    upoly_trim(field, a);
  }
  return a;
}

/// Monic gcd; zero when both inputs are zero.
template <class Field>
UPoly<Field> upoly_gcd(const Field& field, UPoly<Field> a, UPoly<Field> b) {
  while (!b.empty()) {
    UPoly<Field> r = upoly_rem(field, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const auto inv = field.inv(a.back());
    for (auto& c : a) c = field.mul(c, inv);
  }
  return a;
}

/// Maps an arity-1 integer polynomial into the field.
template <class Field>
UPoly<Field> to_upoly(const Field& field, const IntPolynomial& f) {
  if (f.arity() != 1) throw std::invalid_argument("expected a univariate polynomial");
  UPoly<Field> out(f.is_zero() ? 0 : f.degree_in(0) + 1, field.zero());
  for (const auto& [m, c] : f.terms()) out[m[0]] = field.from(c);
  upoly_trim(field, out);
  return out;
}

/// Integers y with p(y) = 0 and |y| <= bound, ascending. `coeffs` lists p from
/// degree 0 up and must be monic of degree >= 1. Exact: the integer sequence
/// p(-bound..bound) is cut into monotone runs using finite differences, and
/// each run is bisected for its zeros.
std::vector<Integer> integer_roots_monic(std::span<const Integer> coeffs, const Integer& bound);

/// Same for an arity-1 IntPolynomial.
std::vector<Integer> integer_roots_monic(const IntPolynomial& p, const Integer& bound);

/// Machine-integer variant for hot loops. Returns false, leaving `out`
/// untouched, when intermediate values could overflow; the caller then falls
/// back to the exact version.
bool integer_roots_monic_fast(std::span<const __int128> coeffs, std::int64_t bound, std::vector<std::int64_t>& out);

/// All rational roots of a monic polynomial with rational coefficients,
/// ascending and without multiplicity.
std::vector<Rational> rational_roots_monic(std::span<const Rational> coeffs);

}  // namespace wdm
