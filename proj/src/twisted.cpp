#include "wdm/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "wdm/enumeration.hpp"
#include "wdm/univariate.hpp"

namespace wdm {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

void add_scaled(QPoly& acc, const QPoly& p, const Rational& c) {
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
  trim(acc);
}

Rational eval(const QPoly& p, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

/// p(t + c).
QPoly shift(const QPoly& p, const Rational& c) {
  QPoly out;
  for (std::size_t k = p.size(); k-- > 0;) {
    out = mul(out, QPoly{c, 1});
    if (out.empty()) out.push_back(0);
    out[0] += p[k];
    trim(out);
  }
  return out;
}

/// F(y(t), x1(t), x2(t)).
QPoly compose(const IntPolynomial& F, const std::vector<QPoly>& images) {
  std::vector<std::vector<QPoly>> powers(images.size());
  auto power = [&](std::size_t v, Exponent k) -> const QPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(QPoly{1});
    while (cache.size() <= k) cache.push_back(mul(cache.back(), images[v]));
    return cache[k];
  };
  QPoly out;
  for (const auto& [m, c] : F.terms()) {
    QPoly term{Rational(c)};
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) term = mul(term, power(v, m[v]));
    add_scaled(out, term, 1);
  }
  return out;
}

std::vector<QPoly> line_images(const TwistedLine& line) {
  QPoly y = line.y;
  trim(y);
  return {y, QPoly{line.a1, Rational(line.v1)}, QPoly{line.a2, Rational(line.v2)}};
}

/// Degree <= k - 1 interpolant through k points.
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  QPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = mul(basis, QPoly{-xs[j], 1});
      denom *= xs[i] - xs[j];
    }
    add_scaled(out, basis, ys[i] / denom);
  }
  return out;
}

bool lex_positive(const Integer& v1, const Integer& v2) { return v1 > 0 || (v1 == 0 && v2 > 0); }

/// Key identifying the plane line through (x1, x2) with primitive direction v.
std::tuple<Integer, Integer, Integer> plane_key(const Integer& v1, const Integer& v2, const Integer& x1,
                                                const Integer& x2) {
  return {v1, v2, v2 * x1 - v1 * x2};
}

}  // namespace

TwistedLine TwistedLine::canonical() const {
  TwistedLine out = *this;
  if (!lex_positive(out.v1, out.v2)) {
    out.v1 = -out.v1;
    out.v2 = -out.v2;
    for (std::size_t k = 1; k < out.y.size(); k += 2) out.y[k] = -out.y[k];
  }
  const Rational c = out.v1 != 0 ? Rational(-out.a1 / out.v1) : Rational(-out.a2 / out.v2);
  QPoly shifted = shift(out.y, c);
  shifted.resize(out.y.size(), 0);
  out.y = std::move(shifted);
  out.a1 += c * out.v1;
  out.a2 += c * out.v2;
  return out;
}

Direction canonical_direction(const Integer& we, const Integer& v1, const Integer& v2, std::uint32_t e) {
  if (lex_positive(v1, v2) || (v1 == 0 && v2 == 0)) return {we, v1, v2};
  return {e % 2 == 0 ? we : Integer(-we), -v1, -v2};
}

Direction direction_of(const TwistedLine& line) {
  if (!is_integral(line.we())) throw std::domain_error("twisted line has a non-integral leading coefficient");
  return canonical_direction(line.we().get_num(), line.v1, line.v2, line.e());
}

bool lies_on(const CoverPolynomial& F, const TwistedLine& line) {
  if (F.n != 2) throw std::invalid_argument("twisted lines live on surfaces with n = 2");
  return compose(F.full(), line_images(line)).empty();
}

std::vector<TwistedLine> fit_twisted_lines(const CoverPolynomial& F, const PlaneLine& line) {
  if (F.n != 2) throw std::invalid_argument("twisted lines live on surfaces with n = 2");
  Integer g;
  mpz_gcd(g.get_mpz_t(), line.v1.get_mpz_t(), line.v2.get_mpz_t());
  if (g != 1) throw std::invalid_argument("line direction must be a coprime integer pair");
  const std::uint32_t e = F.e;
  const std::vector<IntPolynomial> fiber = F.fiber_coefficients();
  std::vector<Rational> ts;
  std::vector<std::vector<Rational>> roots;
  for (std::uint32_t k = 0; k <= e; ++k) {
    const Rational t(k);
    const std::vector<Rational> x{0, line.a1 + t * line.v1, line.a2 + t * line.v2};
    std::vector<Rational> coeffs;
    for (const IntPolynomial& c : fiber) coeffs.push_back(c.evaluate(std::span<const Rational>(x)));
    std::vector<Rational> r = rational_roots_monic(coeffs);
    if (r.empty()) return {};
    ts.push_back(t);
    roots.push_back(std::move(r));
  }
  std::set<TwistedLine> found;
  std::vector<std::size_t> pick(roots.size(), 0);
  while (true) {
    std::vector<Rational> ys;
    for (std::size_t k = 0; k < roots.size(); ++k) ys.push_back(roots[k][pick[k]]);
    QPoly y = interpolate(ts, ys);
    y.resize(e + 1, 0);
    TwistedLine candidate{y, line.a1, line.a2, line.v1, line.v2};
    if (lies_on(F, candidate)) found.insert(candidate);
    std::size_t i = pick.size();
    bool done = true;
    while (i-- > 0) {
      if (++pick[i] < roots[i].size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  return {found.begin(), found.end()};
}

std::vector<Direction> enumerate_directions(const IntPolynomial& F_top, std::uint32_t e, std::int64_t B,
                                            unsigned threads) {
  if (B < 1) throw std::invalid_argument("height bound B must be at least 1");
  if (F_top.arity() != 3) throw std::invalid_argument("directions need F_top in Y, X1, X2");
  if (!F_top.is_zero() && F_top.total_degree() == 0) throw std::invalid_argument("F_top must be nonconstant");
  const std::vector<IntPolynomial> coeffs = F_top.coefficients_in(0);
  const IntPolynomial& lead = coeffs.back();
  if (coeffs.size() < 2 || !lead.is_constant() || lead.leading_coefficient() != 1)
    throw std::invalid_argument("F_top must be monic in Y");
  const Integer y_bound = ipow(Integer(static_cast<long>(B)), e);

  auto sweep = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<Direction> out;
    std::vector<Integer> x(3);
    std::vector<Integer> c(coeffs.size());
    for (std::int64_t v1 = lo; v1 <= hi; ++v1) {
      for (std::int64_t v2 = -B; v2 <= B; ++v2) {
        if (!(v1 > 0 || (v1 == 0 && v2 > 0)) || std::gcd(v1, v2) != 1) continue;
        x[1] = static_cast<long>(v1);
        x[2] = static_cast<long>(v2);
        for (std::size_t j = 0; j < coeffs.size(); ++j) c[j] = coeffs[j].evaluate(std::span<const Integer>(x));
        for (const Integer& y : integer_roots_monic(c, y_bound)) out.push_back({y, x[1], x[2]});
      }
    }
    return out;
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(B + 1)));
  std::vector<std::vector<Direction>> parts(workers);
  if (workers == 1) {
    parts[0] = sweep(0, B);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t lo = (B + 1) * w / workers;
      const std::int64_t hi = (B + 1) * (w + 1) / workers - 1;
      pool.emplace_back([&, w, lo, hi] { parts[w] = sweep(lo, hi); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<Direction> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

double direction_envelope(std::uint32_t e, std::uint32_t d, double B) {
  return static_cast<double>(e) * e * std::pow(static_cast<double>(d), 3) * std::pow(B, 2.0 / d);
}

std::vector<std::vector<Integer>> points_on_twisted_line(const TwistedLine& line, std::int64_t B) {
  if (B < 1) throw std::invalid_argument("height bound B must be at least 1");
  Integer g, alpha, beta;
  mpz_gcdext(g.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t(), line.v1.get_mpz_t(), line.v2.get_mpz_t());
  if (abs(g) != 1) throw std::invalid_argument("line direction must be a coprime integer pair");
  if (g < 0) {
    alpha = -alpha;
    beta = -beta;
  }
  // Integral x forces t = k - (alpha a1 + beta a2) with k an integer.
  const Rational t0 = -(Rational(alpha) * line.a1 + Rational(beta) * line.a2);
  const Rational b1 = line.a1 + t0 * line.v1;
  const Rational b2 = line.a2 + t0 * line.v2;
  if (!is_integral(b1) || !is_integral(b2)) return {};
  const Integer Bz(static_cast<long>(B));
  Integer lo, hi;
  bool bounded = false;
  for (const auto& [b, v] : {std::pair{b1.get_num(), line.v1}, std::pair{b2.get_num(), line.v2}}) {
    if (v == 0) {
      if (abs(b) > Bz) return {};
      continue;
    }
    Integer l = v > 0 ? ceil_div(-Bz - b, v) : ceil_div(Bz - b, v);
    Integer h = v > 0 ? floor_div(Bz - b, v) : floor_div(-Bz - b, v);
    if (!bounded) {
      lo = l;
      hi = h;
      bounded = true;
    } else {
      lo = std::max(lo, l);
      hi = std::min(hi, h);
    }
  }
  const Integer y_bound = ipow(Bz, line.e());
  std::vector<std::vector<Integer>> out;
  for (Integer k = lo; k <= hi; ++k) {
    const Rational y = eval(line.y, t0 + k);
    if (!is_integral(y) || abs(y.get_num()) > y_bound) continue;
    out.push_back({y.get_num(), b1.get_num() + k * line.v1, b2.get_num() + k * line.v2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

LineCount count_on_twisted_line(const TwistedLine& line, std::uint32_t e, std::int64_t B, const CoverPolynomial* F) {
  if (line.e() != e) throw std::invalid_argument("line degree does not match e");
  if (F && !lies_on(*F, line)) throw HypothesisError("line does not lie on the surface");
  LineCount out;
  out.exact = points_on_twisted_line(line, B).size();
  const double height = std::max({std::pow(std::fabs(line.we().get_d()), 1.0 / e), std::fabs(line.v1.get_d()),
                                  std::fabs(line.v2.get_d())});
  out.bound = 2.0 * e * static_cast<double>(B) / height + e;
  return out;
}

TwistedAggregate aggregate_twisted(const CoverPolynomial& F, std::int64_t B, const std::vector<TwistedLine>& lines) {
  std::set<TwistedLine> distinct;
  for (const TwistedLine& line : lines) {
    if (line.e() != F.e) throw std::invalid_argument("line degree does not match e");
    if (!lies_on(F, line)) throw HypothesisError("line does not lie on the surface");
    distinct.insert(line.canonical());
  }
  TwistedAggregate out;
  std::set<std::vector<Integer>> points;
  for (const TwistedLine& line : distinct) {
    for (auto& pt : points_on_twisted_line(line, B)) points.insert(std::move(pt));
    ++out.histogram[direction_of(line)];
  }
  out.total = points.size();
  out.distinct_lines = distinct.size();
  const double ed = static_cast<double>(F.e) * F.d;
  double lead = std::pow(ed, F.e + 4.0) * static_cast<double>(B);
  if (F.d == 2) lead *= std::log(static_cast<double>(B));
  out.bound = lead + static_cast<double>(F.e) * static_cast<double>(distinct.size());
  out.per_direction_limit = static_cast<std::uint64_t>(std::llround(std::pow(ed, F.e + 1.0)));
  for (const auto& [dir, count] : out.histogram) out.per_direction_ok = out.per_direction_ok && count <= out.per_direction_limit;
  return out;
}

Rational lagrange_leading_coeff(const std::vector<std::pair<Integer, Integer>>& samples, std::uint32_t e) {
  if (samples.size() < e + 1) throw std::invalid_argument("need at least e + 1 samples");
  std::set<Integer> seen;
  for (const auto& [t, y] : samples)
    if (!seen.insert(t).second) throw std::invalid_argument("duplicate sample parameter t = " + t.get_str());
  Rational out = 0;
  for (std::size_t i = 0; i <= e; ++i) {
    Integer denom = 1;
    for (std::size_t j = 0; j <= e; ++j)
      if (j != i) denom *= samples[i].first - samples[j].first;
    out += make_rational(samples[i].second, denom);
  }
  return out;
}

double lagrange_bound(std::uint32_t e, double B) { return 2.0 * (e + 1) * std::pow(B, e) / e; }

std::vector<TwistedLine> discover_twisted_lines(const CoverPolynomial& F, std::int64_t B, std::uint64_t pair_budget) {
  if (F.n != 2) throw std::invalid_argument("twisted lines live on surfaces with n = 2");
  CountOptions opts;
  opts.retain = true;
  const CountResult solutions = count_affine(F, WBox{F.e, B, 2}, opts);
  std::set<std::pair<Integer, Integer>> plane_set;
  for (const auto& pt : solutions.points) plane_set.insert({pt[1], pt[2]});
  const std::vector<std::pair<Integer, Integer>> plane(plane_set.begin(), plane_set.end());

  std::set<std::tuple<Integer, Integer, Integer>> tried;
  std::set<TwistedLine> found;
  auto try_line = [&](const Integer& x1, const Integer& x2, Integer v1, Integer v2) {
    if (!lex_positive(v1, v2)) {
      v1 = -v1;
      v2 = -v2;
    }
    if (!tried.insert(plane_key(v1, v2, x1, x2)).second) return;
    for (const TwistedLine& line : fit_twisted_lines(F, PlaneLine{Rational(x1), Rational(x2), v1, v2}))
      found.insert(line.canonical());
  };

  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < plane.size() && pairs < pair_budget; ++i) {
    for (std::size_t j = i + 1; j < plane.size() && pairs < pair_budget; ++j, ++pairs) {
      Integer d1 = plane[j].first - plane[i].first;
      Integer d2 = plane[j].second - plane[i].second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
      try_line(plane[i].first, plane[i].second, d1 / g, d2 / g);
    }
  }
  for (const Direction& dir : enumerate_directions(F.top, F.e, B))
    for (const auto& [x1, x2] : plane) try_line(x1, x2, dir.v1, dir.v2);
  return {found.begin(), found.end()};
}

}  // namespace wdm
