#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "support.hpp"
#include "wdm/enumeration.hpp"
#include "wdm/twisted.hpp"

using namespace wdm;
using wdm::testing::P;

namespace {

CoverPolynomial cover(const std::string& text, std::uint32_t e) { return split_cover_form(P(text, 3), 2, e); }

Rational eval_y(const TwistedLine& line, const Rational& t) {
  Rational v = 0;
  for (std::size_t i = line.y.size(); i-- > 0;) v = v * t + line.y[i];
  return v;
}

/// Whether (y, x1, x2) lies on the line, solving for t from the plane part.
bool on_line(const TwistedLine& line, const std::vector<Integer>& pt) {
  Rational t;
  if (line.v1 != 0) {
    t = (Rational(pt[1]) - line.a1) / Rational(line.v1);
    if (Rational(pt[2]) != line.a2 + t * Rational(line.v2)) return false;
  } else {
    if (Rational(pt[1]) != line.a1) return false;
    t = (Rational(pt[2]) - line.a2) / Rational(line.v2);
  }
  return eval_y(line, t) == Rational(pt[0]);
}

TwistedLine make_line(std::vector<Rational> y, Rational a1, Rational a2, long v1, long v2) {
  return TwistedLine{std::move(y), std::move(a1), std::move(a2), Integer(v1), Integer(v2)};
}

/// x1 = a1 + q^2 t, x2 = (p/q)^2 x1, y = (p/q) x1^2 on Y^2 = X1^3 X2.
TwistedLine quartic_family(long p, long q, long a1) {
  const Rational s = make_rational(p, q);
  const Rational A = a1;
  const Rational Q2 = q * q;
  return make_line({s * A * A, 2 * s * A * Q2, s * Q2 * Q2}, A, s * s * A, q * q, p * p);
}

}  // namespace

TEST_CASE("fit_twisted_lines examples") {
  const auto a = fit_twisted_lines(cover("Y^2 - X1*X2", 1), PlaneLine{0, 0, 1, 1});
  REQUIRE(a.size() == 2);
  std::set<Rational> slopes{a[0].y[1], a[1].y[1]};
  CHECK(slopes == std::set<Rational>{-1, 1});
  for (const auto& l : a) CHECK(l.y[0] == 0);

  const auto b = fit_twisted_lines(cover("Y^2 - X1^3*X2", 2), PlaneLine{0, 0, 1, 1});
  REQUIRE(b.size() == 2);
  std::set<Rational> lead{b[0].we(), b[1].we()};
  CHECK(lead == std::set<Rational>{-1, 1});
  for (const auto& l : b) {
    CHECK(l.y[0] == 0);
    CHECK(l.y[1] == 0);
  }

  const auto c = fit_twisted_lines(cover("Y^2 - X1*X2", 1), PlaneLine{0, 0, 1, 0});
  REQUIRE(c.size() == 1);
  CHECK(c[0].y == std::vector<Rational>{0, 0});

  CHECK(fit_twisted_lines(cover("Y^2 - X1*X2", 1), PlaneLine{1, 2, 1, 1}).empty());
}

TEST_CASE("fitted lines satisfy the identity and lie over X_inf") {
  const std::vector<std::pair<std::string, std::uint32_t>> corpus{
      {"Y^2 - X1*X2", 1}, {"Y^2 - X1^3*X2", 2}, {"Y^3 - X1^2*X2", 1}, {"Y^2 - X1^2 + X2^2 - 1", 1}};
  for (const auto& [text, e] : corpus) {
    CAPTURE(text);
    const CoverPolynomial F = cover(text, e);
    for (long v1 = -2; v1 <= 2; ++v1)
      for (long v2 = -2; v2 <= 2; ++v2) {
        if (std::gcd(v1, v2) != 1) continue;
        for (long a = -2; a <= 2; ++a) {
          const auto lines = fit_twisted_lines(F, PlaneLine{a, Rational(0), Integer(v1), Integer(v2)});
          CHECK(lines.size() <= F.d);
          for (const auto& l : lines) {
            CHECK(lies_on(F, l));
            CHECK(is_integral(l.we()));
            const std::vector<Integer> dir{l.we().get_num(), l.v1, l.v2};
            CHECK(F.top.evaluate(dir) == 0);
          }
        }
      }
  }
}

TEST_CASE("enumerate_directions") {
  const auto a = enumerate_directions(P("Y^2 - X1*X2", 3), 1, 1);
  const std::vector<Direction> expected_a{
      canonical_direction(0, 1, 0, 1), canonical_direction(0, 0, 1, 1), canonical_direction(1, 1, 1, 1),
      canonical_direction(-1, 1, 1, 1)};
  CHECK(std::set<Direction>(a.begin(), a.end()) == std::set<Direction>(expected_a.begin(), expected_a.end()));
  CHECK(a.size() == 4);

  // the six raw triples collapse in pairs under (we, v1, v2) ~ (we, -v1, -v2)
  const auto b = enumerate_directions(P("Y^2 - X1^3*X2", 3), 2, 1);
  std::set<Direction> raw;
  for (const auto& [w, x, y] : std::vector<std::tuple<long, long, long>>{
           {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {-1, 1, 1}, {1, -1, -1}, {-1, -1, -1}})
    raw.insert(canonical_direction(w, x, y, 2));
  CHECK(std::set<Direction>(b.begin(), b.end()) == raw);
  CHECK(b.size() == 4);
  for (const auto& d : b) CHECK(P("Y^2 - X1^3*X2", 3).evaluate(std::vector<Integer>{d.we, d.v1, d.v2}) == 0);

  for (const auto& d : enumerate_directions(P("Y^3 - X1*X2^2 + X1^3", 3), 1, 20)) CHECK((d.v1 != 0 || d.v2 != 0));
  CHECK(enumerate_directions(P("Y^2 - X1*X2", 3), 1, 16, 3) == enumerate_directions(P("Y^2 - X1*X2", 3), 1, 16));
}

TEST_CASE("direction counts stay under the envelope") {
  for (const auto& [text, e, d] : std::vector<std::tuple<std::string, std::uint32_t, std::uint32_t>>{
           {"Y^2 - X1*X2", 1, 2}, {"Y^2 - X1^3*X2", 2, 2}, {"Y^3 - X1^2*X2 - X2^3", 1, 3}}) {
    for (std::int64_t B : {2, 4, 8, 16, 32}) {
      const auto dirs = enumerate_directions(P(text, 3), e, B);
      CHECK(static_cast<double>(dirs.size()) <= direction_envelope(e, d, static_cast<double>(B)));
    }
  }
}

TEST_CASE("count_on_twisted_line examples") {
  const CoverPolynomial F = cover("Y^2 - X1*X2", 1);
  const TwistedLine diag = make_line({0, 1}, 0, 0, 1, 1);
  const LineCount a = count_on_twisted_line(diag, 1, 5, &F);
  CHECK(a.exact == 11);
  CHECK(a.bound == doctest::Approx(11));

  const CoverPolynomial G = cover("Y^2 - X1^3*X2", 2);
  const LineCount b = count_on_twisted_line(make_line({0, 0, 1}, 0, 0, 1, 1), 2, 3, &G);
  CHECK(b.exact == 7);
  CHECK(b.bound == doctest::Approx(14));

  // (10 t, 100 t, t) lies on Y^2 = X1 X2 with max height 100 in v
  const TwistedLine steep = make_line({0, 10}, 0, 0, 100, 1);
  const LineCount c = count_on_twisted_line(steep, 1, 50, &F);
  CHECK(static_cast<double>(c.exact) <= c.bound);
  CHECK(c.exact == 1);

  CHECK_THROWS(count_on_twisted_line(make_line({1, 1}, 0, 0, 1, 1), 1, 5, &F));
  // no integral point at all
  CHECK(count_on_twisted_line(make_line({Rational(1, 2), 1}, 0, 0, 1, 1), 1, 5).exact == 0);
}

TEST_CASE("count_on_twisted_line matches a scan of the plane box") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const long p = 1 + static_cast<long>(rng() % 3);
    const long q = 1 + static_cast<long>(rng() % 3);
    if (std::gcd(p, q) != 1) continue;
    const long a1 = static_cast<long>(rng() % 9) - 4;
    const TwistedLine line = quartic_family(p, q, a1);
    const CoverPolynomial F = cover("Y^2 - X1^3*X2", 2);
    REQUIRE(lies_on(F, line));
    for (std::int64_t B : {3, 7, 20}) {
      std::uint64_t expected = 0;
      const Integer Ye = ipow(Integer(static_cast<long>(B)), 2);
      for (long x1 = -B; x1 <= B; ++x1)
        for (long x2 = -B; x2 <= B; ++x2) {
          // the point's y is determined by the line; test membership with that y
          const Rational t = (Rational(x1) - line.a1) / Rational(line.v1);
          if (Rational(x2) != line.a2 + t * Rational(line.v2)) continue;
          const Rational y = eval_y(line, t);
          if (is_integral(y) && abs(y.get_num()) <= Ye) ++expected;
        }
      const LineCount c = count_on_twisted_line(line, 2, B, &F);
      CHECK(c.exact == expected);
      CHECK(static_cast<double>(c.exact) <= c.bound);
      CHECK(points_on_twisted_line(line, B).size() == expected);
    }
  }
}

TEST_CASE("aggregate_twisted") {
  const CoverPolynomial F = cover("Y^2 - X1*X2", 1);
  const TwistedLine up = make_line({0, 1}, 0, 0, 1, 1);
  const TwistedLine down = make_line({0, -1}, 0, 0, 1, 1);
  const auto one = aggregate_twisted(F, 5, {up});
  CHECK(one.total == 11);
  CHECK(one.bound >= 32.0 * 5 + 1);
  const auto two = aggregate_twisted(F, 5, {up, down});
  CHECK(two.total == 21);
  CHECK(two.histogram.size() == 2);
  CHECK(two.per_direction_ok);
  const auto none = aggregate_twisted(F, 5, {});
  CHECK(none.total == 0);
  CHECK(none.bound == doctest::Approx(std::pow(2.0, 5) * 5 * std::log(5.0)));
  const auto cubic = aggregate_twisted(cover("Y^3 - X1^2*X2", 1), 5, {});
  CHECK(cubic.bound == doctest::Approx(std::pow(3.0, 5) * 5));
  CHECK_THROWS_AS(aggregate_twisted(F, 5, {make_line({1, 1}, 0, 0, 1, 1)}), HypothesisError);
}

TEST_CASE("discovered lines: identity, counts and union oracle") {
  for (const auto& [text, e] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"Y^2 - X1*X2", 1}, {"Y^2 - X1^3*X2", 2}, {"Y^2 - X1^2 - X2^2", 1}}) {
    CAPTURE(text);
    const CoverPolynomial F = cover(text, e);
    for (std::int64_t B : {3, 6}) {
      const auto lines = discover_twisted_lines(F, B);
      CHECK_FALSE(lines.empty());
      for (const auto& l : lines) {
        CHECK(lies_on(F, l));
        CHECK(l == l.canonical());
        const LineCount c = count_on_twisted_line(l, e, B);
        CHECK(static_cast<double>(c.exact) <= c.bound);
      }
      const auto agg = aggregate_twisted(F, B, lines);
      const auto all = count_affine(F, WBox{e, B, 2}, CountOptions{true, 1, 0, 0}).points;
      std::uint64_t expected = 0;
      for (const auto& pt : all) {
        bool hit = false;
        for (const auto& l : lines) hit = hit || on_line(l, pt);
        if (hit) ++expected;
      }
      CHECK(agg.total == expected);
      CHECK(static_cast<double>(agg.total) <= agg.bound);
      CHECK(agg.per_direction_ok);
    }
  }
}

TEST_CASE("lagrange_leading_coeff") {
  CHECK(lagrange_leading_coeff({{0, 0}, {1, 3}}, 1) == 3);
  CHECK(lagrange_leading_coeff({{0, 0}, {1, 1}, {2, 4}}, 2) == 1);
  const Rational we = lagrange_leading_coeff({{0, 0}, {1, 1}, {-1, 1}}, 2);
  CHECK(we == 1);
  CHECK(std::fabs(we.get_d()) <= lagrange_bound(2, 1));
  CHECK(lagrange_bound(2, 1) == doctest::Approx(3));
  CHECK_THROWS(lagrange_leading_coeff({{0, 0}, {0, 1}}, 1));
  CHECK_THROWS(lagrange_leading_coeff({{0, 0}, {1, 1}}, 2));
}

TEST_CASE("lagrange bound on sampled twisted lines") {
  std::mt19937_64 rng(6);
  const CoverPolynomial F = cover("Y^2 - X1^3*X2", 2);
  for (int trial = 0; trial < 30; ++trial) {
    const long p = 1 + static_cast<long>(rng() % 3);
    const long a1 = static_cast<long>(rng() % 5) - 2;
    const TwistedLine line = quartic_family(p, 1, a1);
    const std::int64_t B = 30;
    const auto pts = points_on_twisted_line(line, B);
    if (pts.size() < 3) continue;
    std::vector<std::pair<Integer, Integer>> samples;
    for (std::size_t i = 0; i < 3; ++i) samples.emplace_back(pts[i][1], pts[i][0]);  // t = x1 since v1 = 1
    // parameter x1 - a1 keeps the leading coefficient
    const Rational we = lagrange_leading_coeff(samples, 2);
    CHECK(we == line.we());
    CHECK(std::fabs(we.get_d()) <= lagrange_bound(2, static_cast<double>(B)));
  }
}
