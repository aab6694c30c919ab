#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wdm/cover.hpp"
#include "wdm/errors.hpp"

namespace wdm {

/// [-B^e, B^e] x [-B, B]^n.
struct WBox {
  std::uint32_t e = 1;
  std::int64_t B = 1;
  std::size_t n = 0;

  Integer y_bound() const { return ipow(Integer(static_cast<long>(B)), e); }
  /// (2B + 1)^n, the number of fibers.
  Integer fiber_count() const { return ipow(Integer(static_cast<long>(2 * B + 1)), n); }
};

struct CountResult {
  std::uint64_t n_aff = 0;
  std::uint64_t n_cover = 0;
  /// (y, x1, ..., xn) in lexicographic order when retained.
  std::vector<std::vector<Integer>> points;
  WBox box;
};

struct CountOptions {
  bool retain = false;
  unsigned threads = 1;
  /// Maximum number of fibers; 0 disables the check.
  std::uint64_t node_budget = 0;
  /// Wall-clock limit in seconds; 0 disables the check.
  double time_budget = 0;
};

/// Fiber-major count of integer solutions of F in the box: for each x the
/// monic fiber F(Y, x) is solved exactly. Throws BudgetExceeded rather than
/// return a partial count.
CountResult count_affine(const CoverPolynomial& F, const WBox& box, const CountOptions& options = {});

/// One line per point, tab-separated, Y first.
void write_points(std::ostream& out, const std::vector<std::vector<Integer>>& points);

struct WProjPoint {
  std::vector<Integer> coords;
  /// Every nonzero coordinate has even weight, so scaling by -1 cannot fix
  /// the sign; x and -x are identified and the larger vector kept.
  bool sign_ambiguous = false;

  friend auto operator<=>(const WProjPoint&, const WProjPoint&) = default;
};

/// Canonical representative: no prime q has q^{w_i} | x_i for all i, and the
/// first nonzero odd-weight coordinate is positive. Throws on the zero vector.
WProjPoint canonicalize(std::vector<Integer> coords, const WeightVector& w);

struct WProjEnumeration {
  /// Distinct points with some integral representative in the box, sorted.
  std::vector<WProjPoint> points;
  /// Points whose canonical representative itself lies in the box.
  std::uint64_t canonical_in_box = 0;
  /// Nonzero integral solutions in the box, before identification.
  std::uint64_t raw_solutions = 0;
  std::uint64_t sigma_excluded = 0;
};

/// Points of V(f) in P(w) with |x_i| <= B^{w_i}. With exclude_sigma, w must be
/// (e, 1, ..., 1); for e > 1 the points (y : 0 : ... : 0) over the singular
/// point are dropped.
WProjEnumeration enumerate_wproj_points(const IntPolynomial& f, const WeightVector& w, std::int64_t B,
                                        bool exclude_sigma, std::uint64_t budget = 50'000'000);

struct SchwarzZippel {
  bool holds = false;
  Integer bound;
  /// bound - observed.
  Integer margin;
};

/// observed <= d (2B + 1)^m.
SchwarzZippel schwarz_zippel_check(std::uint64_t d, std::uint64_t m, std::int64_t B, const Integer& observed);

}  // namespace wdm
