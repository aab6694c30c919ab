#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdm/polynomial.hpp"

namespace wdm {

struct MonomialBasis {
  WeightVector weights;
  std::uint64_t M = 0;
  /// Exponent vectors in the global term order, leading monomial first.
  std::vector<Monomial> monomials;
};

struct MonomialCount {
  Integer exact;
  /// C(M + n, n) / |w|.
  Rational leading_term;
  /// exact - leading_term.
  Rational deviation;
  /// |exact |w| / C(M + n, n) - 1|.
  double relative_deviation = 0;
  /// |deviation| / C(M + n - 1, n - 1), the size of the next-order term.
  double second_order_ratio = 0;
  std::optional<MonomialBasis> basis;
};

/// Number b_w(M) of monomials of weighted degree exactly M, by the
/// coin-counting recurrence.
MonomialCount count_monomials(const WeightVector& w, std::uint64_t M, bool with_basis = false);

/// Monomials of weighted degree exactly M.
MonomialBasis monomial_basis(const WeightVector& w, std::uint64_t M);

/// Monomials of weighted degree at most M.
MonomialBasis affine_basis(const WeightVector& w, std::uint64_t M);

enum class AuxMode { projective, affine };

struct AuxOptions {
  AuxMode mode = AuxMode::projective;
  /// Defaults: lcm(w) in projective mode, 1 in affine mode.
  std::optional<std::uint64_t> M_start;
  /// Defaults: lcm(w) in projective mode, 1 in affine mode.
  std::optional<std::uint64_t> M_step;
  std::uint64_t M_max = 64;
  /// Copied into the result for comparison.
  std::optional<double> theoretical_M;
};

struct AuxTraceStep {
  std::uint64_t M = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  /// Kernel basis vectors tried that turned out to be multiples of f.
  std::size_t divisible = 0;
};

struct AuxSearchResult {
  IntPolynomial g;
  std::uint64_t M_found = 0;
  std::size_t points_caught = 0;
  std::optional<double> theoretical_M;
  std::size_t kernel_dim = 0;
  bool divisibility_checked = false;
  std::vector<AuxTraceStep> trace;
};

/// Smallest M in the search sequence with a g of degree M (projective: weighted
/// homogeneous; affine: weighted degree <= M) vanishing at every point and not
/// divisible by f. g is the first kernel vector of the fraction-free echelon
/// form, made primitive with positive leading coefficient. Points must lie on
/// f = 0. Throws std::runtime_error when M_max is reached.
AuxSearchResult find_aux_poly(const IntPolynomial& f, const WeightVector& w,
                              const std::vector<std::vector<Integer>>& points, const AuxOptions& options = {});

enum class BoundKind { curve, surface, general_affine, general_projective };

std::string to_string(BoundKind kind);
BoundKind parse_bound_kind(const std::string& text);

struct BoundParams {
  double d = 2;
  double e = 1;
  /// Number of affine variables; the hypersurface has dimension m = n - 1.
  double n = 2;
  double B = 2;
  /// ||f||, or ||f_d|| for the affine bound.
  double norm_f = 1;
  double b_f = 1;
  /// |w|; defaults to e, the product of (e, 1, ..., 1).
  std::optional<double> weight_product;
};

/// Degree bounds for auxiliary polynomials with all implicit constants 1:
///   curve               d^4 B^(1/d) log B
///   surface             d^3.5 B^(1/sqrt d) log B
///   general_projective  d^(4-1/m) B^((m+1)/m (|w|/d)^(1/m)) b / ||f||^c + d^2 log B + d^(4-1/m)
///   general_affine      d^(2-1/m) B^((|w|/d)^(1/m)) min(log||f_d|| + d log B + d^2, d^2 b) / ||f_d||^c
///                       + d^(4-1/m) log B
/// with c = |w|^(1/m) / (m d^(1+1/m)). Requires B >= 2.
double theoretical_bounds(BoundKind kind, const BoundParams& params);

enum class Geometry { affine, projective };

struct PadicCheckResult {
  std::uint64_t p = 0;
  std::size_t s = 0;
  Integer determinant;
  bool vacuous = false;
  /// Valuation of the determinant; 0 when vacuous.
  unsigned long observed_valuation = 0;
  /// (m!)^(1/m) m/(m+1) s^(1+1/m) with multiplicity 1.
  double lower_bound = 0;
  double slack = 0;
  /// lower_bound - observed_valuation.
  double deficit = 0;
  /// vacuous, or observed >= ceil(lower_bound - slack).
  bool consistent = true;
};

/// Determinant of (b_i(xi_j)) for s points that are congruent mod p and reduce
/// to a smooth point of f = 0, against the divisibility lower bound. m is
/// arity - 1 in affine geometry and arity - 2 in projective geometry; slack is
/// slack_per_point * s.
PadicCheckResult p_adic_det_check(const IntPolynomial& f, std::uint64_t p,
                                  const std::vector<std::vector<Integer>>& points, const MonomialBasis& basis,
                                  Geometry geometry = Geometry::affine, double slack_per_point = 1.0);

}  // namespace wdm
