#include "wdm/detmethod.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wdm/linalg.hpp"

namespace wdm {

namespace {

void collect(const WeightVector& w, std::size_t i, std::uint64_t remaining, bool exact, Monomial& current,
             std::vector<Monomial>& out) {
  if (i == w.size()) {
    if (!exact || remaining == 0) out.push_back(current);
    return;
  }
  for (std::uint64_t k = 0; k * w[i] <= remaining; ++k) {
    current[i] = static_cast<Exponent>(k);
    collect(w, i + 1, remaining - k * w[i], exact, current, out);
  }
  current[i] = 0;
}

MonomialBasis make_basis(const WeightVector& w, std::uint64_t M, bool exact) {
  MonomialBasis basis{w, M, {}};
  Monomial current(w.size(), 0);
  collect(w, 0, M, exact, current, basis.monomials);
  std::sort(basis.monomials.begin(), basis.monomials.end(), TermOrder{});
  return basis;
}

IntMatrix evaluation_matrix(const std::vector<std::vector<Integer>>& points, const std::vector<Monomial>& monomials) {
  IntMatrix a(points.size(), monomials.size());
  Exponent top = 0;
  for (const Monomial& m : monomials)
    for (Exponent k : m) top = std::max(top, k);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    std::vector<std::vector<Integer>> powers(pt.size(), std::vector<Integer>(top + 1, 1));
    for (std::size_t v = 0; v < pt.size(); ++v)
      for (Exponent k = 1; k <= top; ++k) powers[v][k] = powers[v][k - 1] * pt[v];
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      Integer x = 1;
      for (std::size_t v = 0; v < pt.size(); ++v)
        if (monomials[j][v] != 0) x *= powers[v][monomials[j][v]];
      a(i, j) = std::move(x);
    }
  }
  return a;
}

IntPolynomial from_vector(std::size_t arity, const std::vector<Monomial>& monomials, const std::vector<Integer>& v) {
  IntPolynomial g(arity);
  for (std::size_t j = 0; j < monomials.size(); ++j)
    if (v[j] != 0) g.add_term(monomials[j], v[j]);
  return g;
}

}  // namespace

MonomialBasis monomial_basis(const WeightVector& w, std::uint64_t M) { return make_basis(w, M, true); }

MonomialBasis affine_basis(const WeightVector& w, std::uint64_t M) { return make_basis(w, M, false); }

MonomialCount count_monomials(const WeightVector& w, std::uint64_t M, bool with_basis) {
  std::vector<Integer> ways(M + 1, 0);
  ways[0] = 1;
  for (std::uint32_t wi : w.values())
    for (std::uint64_t k = wi; k <= M; ++k) ways[k] += ways[k - wi];
  MonomialCount out;
  out.exact = ways[M];
  const unsigned long n = w.size() - 1;
  const Integer full = binomial(M + n, n);
  out.leading_term = make_rational(full, Integer(static_cast<unsigned long>(w.product())));
  out.deviation = Rational(out.exact) - out.leading_term;
  const Rational rel = Rational(out.exact * Integer(static_cast<unsigned long>(w.product()))) / Rational(full) - 1;
  out.relative_deviation = std::fabs(rel.get_d());
  if (n >= 1 && M + n >= 1) {
    const Integer next = binomial(M + n - 1, n - 1);
    out.second_order_ratio = std::fabs(Rational(out.deviation / Rational(next)).get_d());
  }
  if (with_basis) out.basis = monomial_basis(w, M);
  return out;
}

AuxSearchResult find_aux_poly(const IntPolynomial& f, const WeightVector& w,
                              const std::vector<std::vector<Integer>>& points, const AuxOptions& options) {
  if (f.is_zero()) throw std::invalid_argument("auxiliary search needs a nonzero f");
  if (f.arity() != w.size()) throw std::invalid_argument("arity does not match weight vector");
  for (const auto& pt : points) {
    if (pt.size() != f.arity()) throw std::invalid_argument("point has the wrong number of coordinates");
    if (f.evaluate(std::span<const Integer>(pt)) != 0) throw std::invalid_argument("point does not lie on f = 0");
  }
  AuxSearchResult result;
  result.theoretical_M = options.theoretical_M;
  result.points_caught = points.size();
  if (points.empty()) {
    result.g = IntPolynomial::constant(f.arity(), 1);
    result.M_found = 0;
    result.kernel_dim = 1;
    result.divisibility_checked = !f.is_constant();
    return result;
  }
  const bool projective = options.mode == AuxMode::projective;
  const std::uint64_t step = options.M_step.value_or(projective ? w.lcm() : 1);
  if (step == 0) throw std::invalid_argument("M step must be positive");
  for (std::uint64_t M = options.M_start.value_or(projective ? w.lcm() : 1); M <= options.M_max; M += step) {
    const MonomialBasis basis = projective ? monomial_basis(w, M) : affine_basis(w, M);
    AuxTraceStep trace{M, basis.monomials.size(), 0, 0, 0};
    if (basis.monomials.empty()) {
      result.trace.push_back(trace);
      continue;
    }
    const IntegerKernel kernel = integer_kernel(evaluation_matrix(points, basis.monomials));
    trace.rank = kernel.rank;
    trace.kernel_dim = kernel.basis.size();
    for (const auto& v : kernel.basis) {
      IntPolynomial g = from_vector(f.arity(), basis.monomials, v).primitive_part().sign_normalized();
      if (divides(f, g)) {
        ++trace.divisible;
        continue;
      }
      for (const auto& pt : points)
        if (g.evaluate(std::span<const Integer>(pt)) != 0) throw std::logic_error("kernel vector does not vanish");
      result.trace.push_back(trace);
      result.g = std::move(g);
      result.M_found = M;
      result.kernel_dim = trace.kernel_dim;
      result.divisibility_checked = true;
      return result;
    }
    result.trace.push_back(trace);
  }
  throw std::runtime_error("no auxiliary polynomial up to M = " + std::to_string(options.M_max));
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::curve: return "curve";
    case BoundKind::surface: return "surface";
    case BoundKind::general_affine: return "general-affine";
    case BoundKind::general_projective: return "general-projective";
  }
  return "?";
}

BoundKind parse_bound_kind(const std::string& text) {
  if (text == "curve") return BoundKind::curve;
  if (text == "surface") return BoundKind::surface;
  if (text == "general-affine") return BoundKind::general_affine;
  if (text == "general-projective") return BoundKind::general_projective;
  throw std::invalid_argument("unknown bound kind '" + text + "'");
}

double theoretical_bounds(BoundKind kind, const BoundParams& q) {
  if (q.B < 2) throw std::invalid_argument("bounds need B >= 2");
  if (q.d < 1 || q.e < 1) throw std::invalid_argument("bounds need d, e >= 1");
  const double logB = std::log(q.B);
  switch (kind) {
    case BoundKind::curve: return std::pow(q.d, 4) * std::pow(q.B, 1 / q.d) * logB;
    case BoundKind::surface: return std::pow(q.d, 3.5) * std::pow(q.B, 1 / std::sqrt(q.d)) * logB;
    case BoundKind::general_affine:
    case BoundKind::general_projective: break;
  }
  const double m = q.n - 1;
  if (m < 1) throw std::invalid_argument("general bounds need a hypersurface of dimension m >= 1");
  if (q.norm_f < 1) throw std::invalid_argument("coefficient norm must be at least 1");
  const double wprod = q.weight_product.value_or(q.e);
  const double ratio = std::pow(wprod / q.d, 1 / m);
  const double c = std::pow(wprod, 1 / m) / (m * std::pow(q.d, 1 + 1 / m));
  const double tail = std::pow(q.d, 4 - 1 / m);
  if (kind == BoundKind::general_projective) {
    return tail * std::pow(q.B, (m + 1) / m * ratio) * q.b_f / std::pow(q.norm_f, c) + q.d * q.d * logB + tail;
  }
  const double numer = std::min(std::log(q.norm_f) + q.d * logB + q.d * q.d, q.d * q.d * q.b_f);
  return std::pow(q.d, 2 - 1 / m) * std::pow(q.B, ratio) * numer / std::pow(q.norm_f, c) + tail * logB;
}

PadicCheckResult p_adic_det_check(const IntPolynomial& f, std::uint64_t p,
                                  const std::vector<std::vector<Integer>>& points, const MonomialBasis& basis,
                                  Geometry geometry, double slack_per_point) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const std::size_t s = points.size();
  if (s == 0 || s != basis.monomials.size()) throw std::invalid_argument("need as many points as basis monomials");
  const Integer P(static_cast<unsigned long>(p));
  for (const auto& pt : points) {
    if (pt.size() != f.arity()) throw std::invalid_argument("point has the wrong number of coordinates");
    if (f.evaluate(std::span<const Integer>(pt)) != 0) throw std::invalid_argument("point does not lie on f = 0");
    for (std::size_t i = 0; i < pt.size(); ++i)
      if (mod_reduce(pt[i] - points[0][i], p) != 0) throw std::invalid_argument("points are not congruent mod p");
  }
  bool smooth = false;
  for (std::size_t v = 0; v < f.arity() && !smooth; ++v)
    smooth = mod_reduce(f.derivative(v).evaluate(std::span<const Integer>(points[0])), p) != 0;
  if (!smooth) throw std::invalid_argument("common reduction is not a smooth point mod p");

  const double m = static_cast<double>(f.arity()) - (geometry == Geometry::affine ? 1.0 : 2.0);
  if (m < 1) throw std::invalid_argument("dimension m must be at least 1");
  PadicCheckResult out;
  out.p = p;
  out.s = s;
  out.determinant = determinant(evaluation_matrix(points, basis.monomials));
  out.vacuous = out.determinant == 0;
  out.lower_bound = std::pow(std::tgamma(m + 1), 1 / m) * m / (m + 1) * std::pow(static_cast<double>(s), 1 + 1 / m);
  out.slack = slack_per_point * static_cast<double>(s);
  if (!out.vacuous) out.observed_valuation = valuation(out.determinant, p);
  out.deficit = out.lower_bound - static_cast<double>(out.observed_valuation);
  out.consistent = out.vacuous || static_cast<double>(out.observed_valuation) >= std::ceil(out.lower_bound - out.slack);
  return out;
}

}  // namespace wdm
