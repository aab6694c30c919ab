#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wdm/integer.hpp"
#include "wdm/weights.hpp"

namespace wdm {

std::uint64_t total_degree(const Monomial& mono);

/// Graded lexicographic order, variable 0 most significant. `operator()(a, b)`
/// is true when a comes first, so maps keyed by this order iterate from the
/// leading term down.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

bool monomial_divides(const Monomial& divisor, const Monomial& dividend);

/// Sparse polynomial over Z in a fixed number of variables. Zero coefficients
/// are never stored; the zero polynomial has no terms.
class IntPolynomial {
 public:
  using TermMap = std::map<Monomial, Integer, TermOrder>;

  IntPolynomial() = default;
  explicit IntPolynomial(std::size_t arity) : arity_(arity) {}

  static IntPolynomial constant(std::size_t arity, const Integer& c);
  static IntPolynomial variable(std::size_t arity, std::size_t index);
  static IntPolynomial term(Monomial mono, const Integer& c);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Integer coefficient(const Monomial& mono) const;
  const Monomial& leading_monomial() const;
  const Integer& leading_coefficient() const;

  /// Adds c * mono, dropping the term if it cancels.
  void add_term(const Monomial& mono, const Integer& c);

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }
  IntPolynomial operator-() const;

  IntPolynomial pow(unsigned exponent) const;

  /// Throws std::domain_error for the zero polynomial.
  std::uint64_t total_degree() const;
  std::uint64_t weighted_degree(const WeightVector& w) const;
  /// Largest exponent of `var`; 0 for the zero polynomial.
  Exponent degree_in(std::size_t var) const;
  /// Indices of the variables that occur.
  std::vector<std::size_t> support() const;

  /// Max absolute coefficient, ||f||. Zero for the zero polynomial.
  Integer norm() const;
  /// gcd of the coefficients, positive; zero for the zero polynomial.
  Integer content() const;
  IntPolynomial primitive_part() const;
  /// Multiplies by -1 if needed so the leading coefficient is positive.
  IntPolynomial sign_normalized() const;
  IntPolynomial derivative(std::size_t var) const;

  Integer evaluate(std::span<const Integer> point) const;
  Rational evaluate(std::span<const Rational> point) const;
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const;

  /// Replaces variable i by images[i]; all images share one arity.
  IntPolynomial substitute(std::span<const IntPolynomial> images) const;
  /// New variable (absent from every term) at position `pos`.
  IntPolynomial insert_variable(std::size_t pos) const;
  /// Drops variable `pos`, which must not occur.
  IntPolynomial remove_variable(std::size_t pos) const;
  /// Old variable i becomes new variable perm[i].
  IntPolynomial permute(std::span<const std::size_t> perm) const;

  /// Coefficients of var^0, var^1, ... as polynomials in the same ring.
  std::vector<IntPolynomial> coefficients_in(std::size_t var) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_ = 0;
  TermMap terms_;
};

/// g / f when f divides g exactly in Q[x] (which for integral g forces an
/// integral quotient), std::nullopt otherwise. Throws on f = 0.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& g, const IntPolynomial& f);
bool divides(const IntPolynomial& f, const IntPolynomial& g);

}  // namespace wdm
