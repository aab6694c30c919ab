#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "wdm/cover.hpp"

namespace wdm {

/// (y, x1, x2) = (a0 + w1 t + ... + we t^e, a1 + v1 t, a2 + v2 t).
struct TwistedLine {
  /// a0, w1, ..., we.
  std::vector<Rational> y;
  Rational a1;
  Rational a2;
  Integer v1;
  Integer v2;

  std::uint32_t e() const { return static_cast<std::uint32_t>(y.size() - 1); }
  const Rational& we() const { return y.back(); }

  /// Same curve with (v1, v2) lexicographically positive and the base point
  /// moved to a1 = 0 (or a2 = 0 when v1 = 0).
  TwistedLine canonical() const;

  friend std::weak_ordering operator<=>(const TwistedLine&, const TwistedLine&) = default;
};

/// Canonical under (we, v1, v2) ~ ((-1)^e we, -v1, -v2): (v1, v2) is
/// lexicographically positive.
struct Direction {
  Integer we;
  Integer v1;
  Integer v2;

  friend std::weak_ordering operator<=>(const Direction&, const Direction&) = default;
};

Direction canonical_direction(const Integer& we, const Integer& v1, const Integer& v2, std::uint32_t e);
Direction direction_of(const TwistedLine& line);

/// F(y(t), x1(t), x2(t)) is the zero polynomial.
bool lies_on(const CoverPolynomial& F, const TwistedLine& line);

/// Plane line (a1 + v1 t, a2 + v2 t).
struct PlaneLine {
  Rational a1;
  Rational a2;
  Integer v1;
  Integer v2;
};

/// Every twisted line over the plane line, found by interpolating rational
/// fiber roots at t = 0, ..., e and verified exactly. At most d lines.
std::vector<TwistedLine> fit_twisted_lines(const CoverPolynomial& F, const PlaneLine& line);

/// Directions (we : v1 : v2) on F_top = 0 with |we| <= B^e, |v_i| <= B and
/// gcd(v1, v2) = 1, sorted.
std::vector<Direction> enumerate_directions(const IntPolynomial& F_top, std::uint32_t e, std::int64_t B,
                                            unsigned threads = 1);

/// e^2 d^3 B^(2/d).
double direction_envelope(std::uint32_t e, std::uint32_t d, double B);

struct LineCount {
  std::uint64_t exact = 0;
  /// 2 e B / max(|we|^(1/e), |v1|, |v2|) + e.
  double bound = 0;
};

/// Integral points of the line in [-B^e, B^e] x [-B, B]^2. When F is given the
/// line is first checked to lie on it.
LineCount count_on_twisted_line(const TwistedLine& line, std::uint32_t e, std::int64_t B,
                                const CoverPolynomial* F = nullptr);

/// The integral box points themselves, (y, x1, x2) in increasing order.
std::vector<std::vector<Integer>> points_on_twisted_line(const TwistedLine& line, std::int64_t B);

struct TwistedAggregate {
  std::uint64_t total = 0;
  /// (ed)^(e+4) B + e #I, with an extra log B factor on the first term when d = 2.
  double bound = 0;
  std::size_t distinct_lines = 0;
  std::map<Direction, std::size_t> histogram;
  /// (de)^(e+1).
  std::uint64_t per_direction_limit = 0;
  bool per_direction_ok = true;
};

/// Counts box points on the union of the lines; throws HypothesisError for a
/// line not on F.
TwistedAggregate aggregate_twisted(const CoverPolynomial& F, std::int64_t B, const std::vector<TwistedLine>& lines);

/// Leading coefficient of the degree <= e interpolant through the first e + 1
/// samples.
Rational lagrange_leading_coeff(const std::vector<std::pair<Integer, Integer>>& samples, std::uint32_t e);

/// 2 (e + 1) B^e / e.
double lagrange_bound(std::uint32_t e, double B);

/// Twisted lines meeting the box, found by fitting over plane lines through
/// pairs of box solutions and over lines through box solutions in each
/// direction of height <= B. Not exhaustive. Sorted, canonical.
std::vector<TwistedLine> discover_twisted_lines(const CoverPolynomial& F, std::int64_t B,
                                                std::uint64_t pair_budget = 200'000);

}  // namespace wdm
