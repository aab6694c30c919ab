#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "wdm/detmethod.hpp"
#include "wdm/enumeration.hpp"
#include "wdm/grading.hpp"

using namespace wdm;
using wdm::testing::P;

namespace {

/// Exponent vectors with sum w_i e_i == M, by nested recursion.
std::uint64_t brute_count(const WeightVector& w, std::size_t i, std::uint64_t M) {
  if (i + 1 == w.size()) return M % w[i] == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (std::uint64_t used = 0; used <= M; used += w[i]) total += brute_count(w, i + 1, M - used);
  return total;
}

Integer eval_mono(const Monomial& m, const std::vector<Integer>& x) {
  Integer v = 1;
  for (std::size_t i = 0; i < m.size(); ++i) v *= ipow(x[i], m[i]);
  return v;
}

std::vector<std::vector<Integer>> box_solutions(const std::string& text, std::int64_t B) {
  return count_affine(split_cover_form(P(text, 3), 2, 1), WBox{1, B, 2}, CountOptions{true, 1, 0, 0}).points;
}

/// s points on Y^2 = X1 X2 congruent to the reduction of (u0 v0 k0, u0^2 k0, v0^2 k0).
std::vector<std::vector<Integer>> congruent_family(long p, long u0, long v0, long k0, std::size_t s, std::mt19937_64& rng) {
  std::vector<std::vector<Integer>> out;
  while (out.size() < s) {
    const Integer u = u0 + p * static_cast<long>(rng() % 5);
    const Integer v = v0 + p * static_cast<long>(rng() % 5);
    const Integer k = k0 + p * static_cast<long>(rng() % 5);
    std::vector<Integer> pt{u * v * k, u * u * k, v * v * k};
    if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace

TEST_CASE("count_monomials examples") {
  CHECK(count_monomials(WeightVector::uniform(3), 2).exact == 6);
  const auto b = count_monomials(WeightVector({2, 1, 1}), 2, true);
  CHECK(b.exact == 4);
  REQUIRE(b.basis);
  std::vector<Monomial> got = b.basis->monomials;
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Monomial>{{0, 0, 2}, {0, 1, 1}, {0, 2, 0}, {1, 0, 0}});
  const auto c = count_monomials(WeightVector({2, 1}), 100);
  CHECK(c.exact == 51);
  CHECK(c.leading_term == Rational(101, 2));
  CHECK(c.deviation == Rational(1, 2));
}

TEST_CASE("count_monomials matches brute enumeration and the basis") {
  const std::vector<WeightVector> grid{WeightVector::uniform(3), WeightVector({2, 1, 1}), WeightVector({3, 2, 1}),
                                       WeightVector({2, 3}),     WeightVector({4, 3, 2, 1}), WeightVector({1, 1, 1, 1})};
  for (const auto& w : grid) {
    for (std::uint64_t M = 0; M <= 30; ++M) {
      const auto c = count_monomials(w, M, true);
      CHECK(c.exact == brute_count(w, 0, M));
      CHECK(c.basis->monomials.size() == c.exact);
      CHECK(std::is_sorted(c.basis->monomials.begin(), c.basis->monomials.end(), TermOrder{}));
      for (const auto& m : c.basis->monomials) CHECK(w.degree(m) == M);
    }
  }
}

TEST_CASE("relative deviation shrinks like 1/M") {
  for (const auto& w : {WeightVector({2, 1, 1}), WeightVector({3, 2, 1}), WeightVector({4, 3, 2})}) {
    const double n = static_cast<double>(w.size() - 1);
    const auto wp = static_cast<double>(w.product());
    for (std::uint64_t M = 4 * w.product(); M <= 400; M += w.lcm()) {
      if (M % w.lcm() != 0) continue;
      CHECK(count_monomials(w, M).relative_deviation <= 2 * n * wp / static_cast<double>(M));
    }
  }
}

TEST_CASE("affine_basis") {
  const WeightVector w({2, 1, 1});
  const MonomialBasis a = affine_basis(w, 5);
  std::size_t expected = 0;
  for (std::uint64_t k = 0; k <= 5; ++k) expected += brute_count(w, 0, k);
  CHECK(a.monomials.size() == expected);
  CHECK(std::is_sorted(a.monomials.begin(), a.monomials.end(), TermOrder{}));
  for (const auto& m : a.monomials) CHECK(w.degree(m) <= 5);
}

TEST_CASE("find_aux_poly examples") {
  const IntPolynomial f = P("Y^2 - X1*X2", 3);
  const WeightVector w = WeightVector::uniform(3);
  const auto empty = find_aux_poly(f, w, {});
  CHECK(empty.M_found == 0);
  CHECK(empty.g == IntPolynomial::constant(3, 1));

  const auto origin = find_aux_poly(f, w, {{0, 0, 0}});
  CHECK(origin.M_found == 1);
  CHECK(origin.g == P("Y", 3));
  CHECK(origin.kernel_dim == 3);

  const auto pts = box_solutions("Y^2 - X1*X2", 1);
  REQUIRE(pts.size() == 9);
  AuxOptions opts;
  opts.mode = AuxMode::affine;
  opts.theoretical_M = theoretical_bounds(BoundKind::surface, BoundParams{2, 1, 3, 2, 1, 1, {}});
  const auto r = find_aux_poly(f, w, pts, opts);
  for (const auto& pt : pts) CHECK(r.g.evaluate(pt) == 0);
  CHECK_FALSE(divides(f, r.g));
  CHECK(static_cast<double>(r.M_found) <= *r.theoretical_M);
  CHECK(r.points_caught == 9);
}

TEST_CASE("find_aux_poly post-conditions on sampled point sets") {
  std::mt19937_64 rng(8);
  for (const std::string text : {"Y^2 - X1*X2", "Y^3 - X1^2*X2 + X2^3 - Y*X1", "Y^2 - X1^2 - X2^2 + 1"}) {
    CAPTURE(text);
    const IntPolynomial f = P(text, 3);
    const auto all = box_solutions(text, 6);
    std::vector<std::vector<Integer>> pts;
    std::uint64_t last_M = 0;
    for (const auto& pt : all) {
      if (rng() % 3 != 0) continue;
      pts.push_back(pt);
      AuxOptions opts;
      opts.mode = AuxMode::affine;
      const auto r = find_aux_poly(f, WeightVector::uniform(3), pts, opts);
      for (const auto& q : pts) CHECK(r.g.evaluate(q) == 0);
      CHECK(r.g.content() == 1);
      CHECK(r.g.leading_coefficient() > 0);
      CHECK_FALSE(divides(f, r.g));
      CHECK(r.M_found >= last_M);
      last_M = r.M_found;
      for (const auto& step : r.trace) CHECK(step.kernel_dim == step.columns - step.rank);
    }
  }
}

TEST_CASE("projective kernels contain f times the lower basis") {
  const IntPolynomial f = P("Y^2 - X1^3*X2", 3);
  const WeightVector w({2, 1, 1});
  const auto sols = enumerate_wproj_points(f, w, 4, false);
  std::vector<std::vector<Integer>> pts;
  for (const auto& pt : sols.points) pts.push_back(pt.coords);
  const auto r = find_aux_poly(f, w, pts);
  CHECK(r.M_found % 2 == 0);
  for (const auto& q : pts) CHECK(r.g.evaluate(q) == 0);
  CHECK(is_weighted_homogeneous(r.g, w));
  for (const auto& step : r.trace) {
    if (step.M >= 4) CHECK(step.kernel_dim >= count_monomials(w, step.M - 4).exact);
    CHECK(step.rank <= pts.size());
  }
}

TEST_CASE("find_aux_poly with generic points saturates") {
  // points on a smooth conic in general position: rank is min(points, b_w(M))
  const IntPolynomial f = P("Y^2 - X1*X2", 3);
  std::vector<std::vector<Integer>> pts;
  for (long u = 1; u <= 4; ++u) pts.push_back({u * 3, u * u, 9});
  AuxOptions opts;
  opts.M_start = 3;
  const auto r = find_aux_poly(f, WeightVector::uniform(3), pts, opts);
  REQUIRE_FALSE(r.trace.empty());
  const auto& step = r.trace.front();
  CHECK(step.kernel_dim == 10 - pts.size());
  CHECK_THROWS(find_aux_poly(f, WeightVector::uniform(3), {{1, 1, 2}}));
}

TEST_CASE("theoretical_bounds") {
  CHECK(theoretical_bounds(BoundKind::curve, BoundParams{2, 1, 2, 16, 1, 1, {}}) ==
        doctest::Approx(16.0 * 4.0 * std::log(16.0)));
  CHECK_THROWS(theoretical_bounds(BoundKind::surface, BoundParams{4, 1, 3, 1, 1, 1, {}}));
  // general projective with m = 1, |w| = 1: B exponent 2/d
  for (double d : {2.0, 3.0, 5.0}) {
    auto main_term = [&](double B) {
      const BoundParams q{d, 1, 2, B, 1, 1, 1.0};
      return theoretical_bounds(BoundKind::general_projective, q) - d * d * std::log(B) - std::pow(d, 3);
    };
    const double slope = std::log(main_term(1e6) / main_term(1e3)) / std::log(1e3);
    CHECK(slope == doctest::Approx(2 / d).epsilon(1e-9));
  }
  CHECK(parse_bound_kind("general-affine") == BoundKind::general_affine);
  CHECK(to_string(BoundKind::general_projective) == "general-projective");
}

TEST_CASE("p_adic_det_check examples") {
  const IntPolynomial f = P("Y^2 - X1*X2", 3);
  const MonomialBasis basis{WeightVector::uniform(3), 1, {{0, 0, 0}, {1, 0, 0}}};
  const auto r = p_adic_det_check(f, 5, {{1, 1, 1}, {6, 6, 6}}, basis);
  CHECK(r.determinant == 5);
  CHECK(r.observed_valuation == 1);
  CHECK(r.consistent);
  const auto swapped = p_adic_det_check(f, 5, {{6, 6, 6}, {1, 1, 1}}, basis);
  CHECK(swapped.determinant == -5);
  CHECK(swapped.observed_valuation == 1);

  const MonomialBasis one{WeightVector::uniform(3), 0, {{0, 0, 0}}};
  const auto single = p_adic_det_check(f, 5, {{1, 1, 1}}, one);
  CHECK(single.lower_bound - single.slack <= 1);
  CHECK(single.consistent);

  CHECK_THROWS(p_adic_det_check(f, 5, {{1, 1, 1}, {2, 1, 4}}, basis));
  CHECK_THROWS(p_adic_det_check(f, 5, {{1, 1, 1}}, basis));
  CHECK_THROWS(p_adic_det_check(f, 5, {{0, 0, 0}, {0, 0, 5}}, basis));
}

TEST_CASE("p_adic_det_check on congruent families") {
  const IntPolynomial f = P("Y^2 - X1*X2", 3);
  const MonomialBasis full = affine_basis(WeightVector::uniform(3), 3);
  std::mt19937_64 rng(12);
  int nonvacuous = 0;
  for (long p : {5L, 7L, 11L}) {
    for (std::size_t s : {2u, 3u, 4u}) {
      for (int family = 0; family < 6; ++family) {
        const long u0 = 1 + static_cast<long>(rng() % (p - 1));
        const long v0 = 1 + static_cast<long>(rng() % (p - 1));
        const long k0 = 1 + static_cast<long>(rng() % (p - 1));
        const auto pts = congruent_family(p, u0, v0, k0, s, rng);
        MonomialBasis basis = full;
        basis.monomials.resize(s);
        const auto r = p_adic_det_check(f, static_cast<std::uint64_t>(p), pts, basis);
        CHECK(r.consistent);
        if (!r.vacuous) {
          ++nonvacuous;
          CHECK(r.observed_valuation >= s - 1);
        }
        // permuting points preserves the valuation
        auto rev = pts;
        std::reverse(rev.begin(), rev.end());
        const auto q = p_adic_det_check(f, static_cast<std::uint64_t>(p), rev, basis);
        CHECK(abs(q.determinant) == abs(r.determinant));
      }
    }
  }
  CHECK(nonvacuous > 0);
}
