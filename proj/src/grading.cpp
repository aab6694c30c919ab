#include "wdm/grading.hpp"

#include <stdexcept>

namespace wdm {

IntPolynomial GradedDecomposition::sum() const {
  IntPolynomial out(weights.size());
  for (const auto& [deg, part] : parts) out += part;
  return out;
}

GradingInfo analyze_grading(const IntPolynomial& f, const WeightVector& w) {
  if (f.arity() != w.size()) throw std::invalid_argument("arity does not match weight vector");
  if (f.is_zero()) throw std::domain_error("zero polynomial has no weighted degree");
  GradingInfo info{0, true, false, GradedDecomposition{w, {}}};
  for (const auto& [m, c] : f.terms()) {
    const std::uint64_t deg = w.degree(m);
    auto [it, inserted] = info.parts.parts.try_emplace(deg, IntPolynomial(f.arity()));
    it->second.add_term(m, c);
    info.weighted_degree = std::max(info.weighted_degree, deg);
  }
  info.is_homogeneous = info.parts.parts.size() == 1;
  info.is_full = info.weighted_degree % w.lcm() == 0;
  return info;
}

bool is_weighted_homogeneous(const IntPolynomial& f, const WeightVector& w) {
  return analyze_grading(f, w).is_homogeneous;
}

namespace {

IntPolynomial lift_parts(const GradingInfo& info, const Integer& H) {
  const std::uint64_t d = info.weighted_degree;
  IntPolynomial out(info.parts.weights.size() + 1);
  for (const auto& [deg, part] : info.parts.parts) {
    const Integer scale = ipow(H, deg);
    for (const auto& [m, c] : part.terms()) {
      Monomial nm;
      nm.reserve(m.size() + 1);
      nm.push_back(static_cast<Exponent>(d - deg));
      nm.insert(nm.end(), m.begin(), m.end());
      out.add_term(nm, c * scale);
    }
  }
  return out;
}

}  // namespace

Homogenized homogenize(const IntPolynomial& f, const WeightVector& w) {
  const GradingInfo info = analyze_grading(f, w);
  return {lift_parts(info, 1), w.prepend_one()};
}

IntPolynomial ev_lift(const IntPolynomial& f, const WeightVector& w, const Integer& H) {
  if (H < 1) throw std::invalid_argument("lift parameter H must be at least 1");
  return lift_parts(analyze_grading(f, w), H);
}

CoordShift coord_shift_search(const IntPolynomial& f, const WeightVector& w, std::uint64_t d) {
  if (f.arity() != w.size()) throw std::invalid_argument("arity does not match weight vector");
  if (f.arity() < 1) throw std::invalid_argument("need at least one variable");
  if (w[w.size() - 1] != 1) throw std::invalid_argument("last weight must be 1");
  const GradingInfo info = analyze_grading(f, w);
  if (!info.is_homogeneous || info.weighted_degree != d)
    throw std::invalid_argument("f must be weighted homogeneous of the stated degree");
  if (f.content() != 1) throw std::invalid_argument("f must be primitive");

  const std::size_t n = f.arity() - 1;
  const Integer threshold_scale = ipow(Integer(3), n * d);
  const Integer norm = f.norm();

  std::vector<std::uint32_t> a(n, 0);
  std::vector<Integer> point(n + 1, 1);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) point[i] = a[i];
    const Integer value = f.evaluate(point);
    if (abs(value) * threshold_scale >= norm) {
      const std::size_t arity = f.arity();
      const IntPolynomial xn = IntPolynomial::variable(arity, n);
      std::vector<IntPolynomial> images;
      images.reserve(arity);
      for (std::size_t i = 0; i < n; ++i)
        images.push_back(IntPolynomial::variable(arity, i) + xn.pow(w[i]) * Integer(a[i]));
      images.push_back(xn);
      return {a, value, f.substitute(images)};
    }
    // Lexicographic odometer over {0..d}^n, last coordinate fastest.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (a[i] < d) {
        ++a[i];
        for (std::size_t j = i + 1; j < n; ++j) a[j] = 0;
        break;
      }
      if (i == 0) throw std::domain_error("no qualifying shift found; f violates the preconditions");
    }
    if (n == 0) throw std::domain_error("no qualifying shift found; f violates the preconditions");
  }
}

}  // namespace wdm
