#include "wdm/cover.hpp"

#include "wdm/grading.hpp"

namespace wdm {

std::vector<IntPolynomial> CoverPolynomial::fiber_coefficients() const {
  std::vector<IntPolynomial> coeffs = full().coefficients_in(0);
  coeffs.resize(d + 1, IntPolynomial(n + 1));
  return coeffs;
}

void validate_cover(const CoverPolynomial& F) {
  const WeightVector w = F.weights();
  if (F.top.arity() != F.n + 1 || F.rest.arity() != F.n + 1)
    throw HypothesisError("cover polynomial parts must have arity n + 1");
  const std::uint64_t top_degree = static_cast<std::uint64_t>(F.d) * F.e;
  Monomial yd(F.n + 1, 0);
  yd[0] = F.d;
  if (F.top.coefficient(yd) != 1) throw HypothesisError("F_top is not monic in Y of degree d");
  for (const auto& [m, c] : F.top.terms()) {
    if (w.degree(m) != top_degree)
      throw HypothesisError("F_top is not weighted homogeneous of degree d*e");
    if (m[0] > F.d) throw HypothesisError("F_top has Y-degree above d");
  }
  for (const auto& [m, c] : F.rest.terms()) {
    if (w.degree(m) >= top_degree) throw HypothesisError("F_0 must have weighted degree below d*e");
  }
}

CoverPolynomial split_cover_form(const IntPolynomial& F, std::size_t n, std::uint32_t e, bool require_cover) {
  if (e < 1) throw std::invalid_argument("Y-weight e must be positive");
  if (F.arity() != n + 1) throw std::invalid_argument("F must be in the variables Y, X1..Xn");
  if (F.is_zero()) throw HypothesisError("zero polynomial has no cover form");
  const WeightVector w = WeightVector::cover(e, n);
  const GradingInfo info = analyze_grading(F, w);
  const std::uint64_t top_degree = info.weighted_degree;
  if (top_degree % e != 0) throw HypothesisError("weighted degree is not a multiple of e; F_top cannot be monic in Y");
  CoverPolynomial out;
  out.n = n;
  out.e = e;
  out.d = static_cast<std::uint32_t>(top_degree / e);
  out.top = info.parts.parts.at(top_degree);
  out.rest = F - out.top;
  Monomial yd(n + 1, 0);
  yd[0] = out.d;
  const Integer lead = out.top.coefficient(yd);
  if (lead == 0) throw HypothesisError("F_top has no Y^d term; not monic in Y");
  if (lead != 1) throw HypothesisError("F_top is not monic in Y (leading coefficient " + lead.get_str() + ")");
  if (require_cover && out.d < 2) throw HypothesisError("cover form needs Y-degree d >= 2");
  validate_cover(out);
  return out;
}

CoverPolynomial slice_hyperplane(const CoverPolynomial& F, const std::vector<Integer>& a, const Integer& k) {
  if (F.n < 3) throw std::invalid_argument("hyperplane slicing needs n >= 3");
  if (a.size() != F.n - 1) throw std::invalid_argument("slice coefficients must have length n - 1");
  const std::size_t arity = F.n + 1;
  std::vector<IntPolynomial> images;
  images.reserve(arity);
  for (std::size_t i = 0; i < F.n; ++i) images.push_back(IntPolynomial::variable(arity, i));
  IntPolynomial plane = IntPolynomial::constant(arity, k);
  for (std::size_t i = 0; i < a.size(); ++i) plane += IntPolynomial::variable(arity, i + 1) * a[i];
  images.push_back(plane);
  const IntPolynomial sliced = F.full().substitute(images).remove_variable(F.n);
  CoverPolynomial out;
  try {
    out = split_cover_form(sliced, F.n - 1, F.e, false);
  } catch (const HypothesisError& err) {
    throw HypothesisError(std::string("slice breaks cover form: ") + err.what());
  }
  if (out.d != F.d) throw HypothesisError("slice changed the Y-degree");
  return out;
}

}  // namespace wdm
