#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdm/errors.hpp"
#include "wdm/polynomial.hpp"

namespace wdm {

struct IrreducibilityResult {
  bool absolutely_irreducible = false;
  /// Decided through random plane sections; a "false" may then be wrong with
  /// small probability. A "true" is always certain.
  bool randomized = false;
  /// Number of absolutely irreducible factors when the differential system
  /// was solved; empty when a cheaper argument (content, square factor,
  /// univariate degree) decided.
  std::optional<std::size_t> factor_count;
  unsigned trials = 0;
};

/// Absolute irreducibility over Q (p = 0) or F_p. f must be nonconstant
/// (after reduction mod p). Two effective variables are decided exactly; more
/// are restricted to `trials` random planes drawn from `seed`.
/// Throws CharacteristicTooSmall when p <= (2m - 1) n for the bivariate
/// degrees (m, n) in play.
IrreducibilityResult absolutely_irreducible(const IntPolynomial& f, std::uint64_t p = 0, std::uint64_t seed = 0,
                                            unsigned trials = 3);

/// Coefficients reduced into [0, p).
IntPolynomial reduce_mod(const IntPolynomial& f, std::uint64_t p);

/// The variables of f that occur, renumbered 0, 1, ... in their original order.
IntPolynomial compress_variables(const IntPolynomial& f);

enum class CountMode { affine, affine_cone, projective_weighted };

std::string to_string(CountMode mode);
CountMode parse_count_mode(const std::string& text);

struct ModPCount {
  std::uint64_t p = 0;
  /// Solutions counted without multiplicity; for projective_weighted, the
  /// number of F_p-points of the weighted projective hypersurface.
  std::uint64_t count = 0;
  CountMode mode = CountMode::affine;
  /// Number of coordinates enumerated.
  std::size_t dimension = 0;
};

/// Exhaustive count of f = 0 over F_p. affine uses the variables of f;
/// affine_cone first homogenizes f in the standard grading when it is not
/// already homogeneous; projective_weighted needs `weights` and counts orbits
/// of F_p^* on nonzero solutions. Throws BudgetExceeded when p^dimension
/// exceeds `budget`.
ModPCount count_points_mod_p(const IntPolynomial& f, std::uint64_t p, CountMode mode,
                             std::uint64_t budget = 100'000'000, unsigned threads = 1,
                             const std::vector<std::uint32_t>& weights = {});

struct BfEstimate {
  std::uint64_t threshold = 0;
  std::vector<std::uint64_t> tested_primes;
  std::vector<std::uint64_t> failing_primes;
  /// Primes whose test raised an error, with the message.
  std::vector<std::pair<std::uint64_t, std::string>> skipped_primes;
  /// Sum over failing primes of log(p) / p; a lower estimate of log b(f).
  double log_b = 0;
  /// max(log ||f|| / d^2, 1).
  double upper_bound = 1;
  bool partial = true;
};

/// Tests f mod p for every prime p in [lo, hi] above the threshold, which
/// defaults to 27 d^4. f must be primitive.
BfEstimate b_f_estimate(const IntPolynomial& f, std::uint64_t d, std::uint64_t lo, std::uint64_t hi,
                        std::optional<std::uint64_t> threshold = std::nullopt, std::uint64_t seed = 0);

}  // namespace wdm
