#include "wdm/irreducibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>
#include <type_traits>

#include "wdm/field.hpp"
#include "wdm/grading.hpp"
#include "wdm/linalg.hpp"
#include "wdm/univariate.hpp"

namespace wdm {

namespace {

struct BivariateOutcome {
  bool irreducible = false;
  std::optional<std::size_t> factor_count;
};

/// Polynomial in the variable `var` of an arity-2 polynomial whose other
/// variable does not occur.
template <class Field>
UPoly<Field> as_upoly(const Field& field, const IntPolynomial& f, std::size_t var) {
  UPoly<Field> out(f.is_zero() ? 0 : f.degree_in(var) + 1, field.zero());
  for (const auto& [m, c] : f.terms()) out[m[var]] = field.add(out[m[var]], field.from(c));
  upoly_trim(field, out);
  return out;
}

/// gcd over F[other] of the coefficients of f in `var`.
template <class Field>
UPoly<Field> content_in(const Field& field, const IntPolynomial& f, std::size_t var) {
  const std::size_t other = 1 - var;
  UPoly<Field> g;
  for (const IntPolynomial& c : f.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = upoly_gcd(field, g, as_upoly(field, c, other));
    if (g.size() == 1) break;
  }
  return g;
}

/// f(x, y0) as a polynomial in x.
template <class Field>
UPoly<Field> specialize_y(const Field& field, const IntPolynomial& f, const typename Field::Element& y0) {
  const Exponent n = f.degree_in(1);
  std::vector<typename Field::Element> powers(n + 1, field.one());
  for (Exponent j = 1; j <= n; ++j) powers[j] = field.mul(powers[j - 1], y0);
  UPoly<Field> out(f.degree_in(0) + 1, field.zero());
  for (const auto& [m, c] : f.terms()) out[m[0]] = field.add(out[m[0]], field.mul(field.from(c), powers[m[1]]));
  upoly_trim(field, out);
  return out;
}

template <class Field>
typename Field::Element sample_point(const Field& field, std::uint64_t k) {
  if constexpr (std::is_same_v<Field, RationalField>) {
    const long v = (k % 2 == 0) ? static_cast<long>(k / 2) : -static_cast<long>(k / 2 + 1);
    return Rational(v);
  } else {
    (void)field;
    return static_cast<typename Field::Element>(k);
  }
}

/// Certifies gcd(f, f_x) = 1 by specializing y; false once more points have
/// failed than the degree of the resultant allows.
template <class Field>
bool squarefree_in_x(const Field& field, const IntPolynomial& f, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t needed = (2 * m - 1) * n + 1;
  const UPoly<Field> lead = as_upoly(field, f.coefficients_in(0)[m], 1);
  std::uint64_t tried = 0;
  const std::uint64_t p = field.characteristic();
  for (std::uint64_t k = 0; tried < needed; ++k) {
    if (p != 0 && k >= p) throw CharacteristicTooSmall("not enough field elements to certify squarefreeness");
    const auto y0 = sample_point(field, k);
    if (field.is_zero(upoly_eval(field, lead, y0))) continue;
    ++tried;
    const UPoly<Field> g = specialize_y(field, f, y0);
    if (upoly_gcd(field, g, upoly_derivative(field, g)).size() == 1) return true;
  }
  return false;
}

/// Dimension of the solution space of f g_y - g f_y = f h_x - h f_x with
/// deg g <= (m - 1, n) and deg h <= (m, n - 1).
template <class Field>
std::size_t differential_kernel_dim(const Field& field, const IntPolynomial& f, Exponent m, Exponent n) {
  const IntPolynomial fx = f.derivative(0);
  const IntPolynomial fy = f.derivative(1);
  std::vector<IntPolynomial> columns;
  for (Exponent i = 0; i < m; ++i) {
    for (Exponent j = 0; j <= n; ++j) {
      const IntPolynomial u = IntPolynomial::term({i, j}, 1);
      columns.push_back(f * u.derivative(1) - u * fy);
    }
  }
  for (Exponent i = 0; i <= m; ++i) {
    for (Exponent j = 0; j < n; ++j) {
      const IntPolynomial u = IntPolynomial::term({i, j}, 1);
      columns.push_back(u * fx - f * u.derivative(0));
    }
  }
  std::map<Monomial, std::size_t> row_of;
  for (const IntPolynomial& c : columns)
    for (const auto& [mono, coeff] : c.terms()) row_of.try_emplace(mono, row_of.size());
  if constexpr (std::is_same_v<Field, RationalField>) {
    (void)field;
    IntMatrix a(row_of.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [mono, coeff] : columns[j].terms()) a(row_of[mono], j) = coeff;
    return columns.size() - integer_rank(std::move(a));
  } else {
    std::vector<std::vector<typename Field::Element>> a(row_of.size(),
                                                        std::vector<typename Field::Element>(columns.size(), 0));
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (const auto& [mono, coeff] : columns[j].terms()) a[row_of[mono]][j] = field.from(coeff);
    return columns.size() - field_rank(field, std::move(a));
  }
}

/// f has arity 2 and coefficients already reduced into the field.
template <class Field>
BivariateOutcome bivariate(const Field& field, const IntPolynomial& f) {
  const Exponent m = f.degree_in(0);
  const Exponent n = f.degree_in(1);
  if (m == 0 || n == 0) {
    const bool linear = f.total_degree() == 1;
    return {linear, linear ? std::optional<std::size_t>(1) : std::nullopt};
  }
  if (content_in(field, f, 0).size() > 1 || content_in(field, f, 1).size() > 1) return {false, std::nullopt};
  const std::uint64_t p = field.characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(2 * m - 1) * n)
    throw CharacteristicTooSmall("prime " + std::to_string(p) + " must exceed (2m - 1) n = " +
                                 std::to_string((2 * m - 1) * n));
  if (!squarefree_in_x(field, f, m, n)) return {false, std::nullopt};
  const std::size_t count = differential_kernel_dim(field, f, m, n);
  return {count == 1, count};
}

BivariateOutcome bivariate_dispatch(const IntPolynomial& f, std::uint64_t p) {
  if (p == 0) return bivariate(RationalField{}, f);
  return bivariate(PrimeField(p), f);
}

}  // namespace

IntPolynomial reduce_mod(const IntPolynomial& f, std::uint64_t p) {
  IntPolynomial out(f.arity());
  for (const auto& [m, c] : f.terms()) {
    const std::uint64_t r = mod_reduce(c, p);
    if (r != 0) out.add_term(m, Integer(static_cast<unsigned long>(r)));
  }
  return out;
}

IntPolynomial compress_variables(const IntPolynomial& f) {
  const std::vector<std::size_t> used = f.support();
  IntPolynomial out(used.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial nm;
    nm.reserve(used.size());
    for (std::size_t v : used) nm.push_back(m[v]);
    out.add_term(nm, c);
  }
  return out;
}

IrreducibilityResult absolutely_irreducible(const IntPolynomial& f, std::uint64_t p, std::uint64_t seed,
                                            unsigned trials) {
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("modulus must be prime");
  const IntPolynomial g = compress_variables(p == 0 ? f : reduce_mod(f, p));
  if (g.is_zero() || g.is_constant()) throw std::invalid_argument("irreducibility needs a nonconstant polynomial");
  IrreducibilityResult result;
  if (g.arity() == 1) {
    result.absolutely_irreducible = g.total_degree() == 1;
    if (result.absolutely_irreducible) result.factor_count = 1;
    return result;
  }
  if (g.arity() == 2) {
    const BivariateOutcome out = bivariate_dispatch(g, p);
    result.absolutely_irreducible = out.irreducible;
    result.factor_count = out.factor_count;
    return result;
  }
  // A plane section that keeps the full degree splits whenever f does, so an
  // irreducible section is a proof; reducible sections are only evidence.
  result.randomized = true;
  const std::uint64_t D = g.total_degree();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff;
  if (p == 0) {
    const long R = static_cast<long>(std::max<std::uint64_t>(2 * D * D * D, 500));
    coeff = std::uniform_int_distribution<long>(-R, R);
  } else {
    coeff = std::uniform_int_distribution<long>(0, static_cast<long>(p - 1));
  }
  const IntPolynomial s = IntPolynomial::variable(2, 0);
  const IntPolynomial t = IntPolynomial::variable(2, 1);
  unsigned informative = 0;
  for (unsigned attempt = 0; informative < trials && attempt < 20 * trials; ++attempt) {
    std::vector<IntPolynomial> images;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      images.push_back(IntPolynomial::constant(2, coeff(rng)) + s * Integer(coeff(rng)) + t * Integer(coeff(rng)));
    }
    IntPolynomial section = g.substitute(images);
    if (p != 0) section = reduce_mod(section, p);
    if (section.is_zero() || section.total_degree() != D) continue;
    ++informative;
    ++result.trials;
    const BivariateOutcome out = bivariate_dispatch(section, p);
    if (out.irreducible) {
      result.absolutely_irreducible = true;
      result.factor_count = 1;
      return result;
    }
    if (out.factor_count && (!result.factor_count || *out.factor_count < *result.factor_count))
      result.factor_count = out.factor_count;
  }
  if (informative == 0) throw std::runtime_error("no nondegenerate plane section found");
  result.absolutely_irreducible = false;
  return result;
}

std::string to_string(CountMode mode) {
  switch (mode) {
    case CountMode::affine: return "affine";
    case CountMode::affine_cone: return "affine-cone";
    case CountMode::projective_weighted: return "projective-weighted";
  }
  return "?";
}

CountMode parse_count_mode(const std::string& text) {
  if (text == "affine") return CountMode::affine;
  if (text == "affine-cone") return CountMode::affine_cone;
  if (text == "projective-weighted") return CountMode::projective_weighted;
  throw std::invalid_argument("unknown count mode '" + text + "'");
}

namespace {

struct ModTerm {
  std::uint64_t coeff;
  Monomial exps;
};

/// Sums weight(point) over solutions whose first coordinate lies in
/// [first_lo, first_hi).
template <class Weight>
std::uint64_t count_slice(const std::vector<ModTerm>& terms, std::size_t dim, std::uint64_t p, Exponent max_exp,
                          std::uint64_t first_lo, std::uint64_t first_hi, const Weight& weight) {
  const PrimeField field(p);
  std::vector<std::vector<std::uint64_t>> pw(p, std::vector<std::uint64_t>(max_exp + 1, 1));
  for (std::uint64_t x = 0; x < p; ++x)
    for (Exponent k = 1; k <= max_exp; ++k) pw[x][k] = field.mul(pw[x][k - 1], x);
  const std::size_t last = dim - 1;
  std::vector<std::uint64_t> point(dim, 0);
  std::vector<std::uint64_t> coeffs(max_exp + 1);
  std::uint64_t total = 0;
  if (last > 0) {
    if (first_lo >= first_hi) return 0;
    point[0] = first_lo;
  }
  while (true) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    for (const ModTerm& term : terms) {
      std::uint64_t v = term.coeff;
      for (std::size_t i = 0; i < last && v != 0; ++i) v = field.mul(v, pw[point[i]][term.exps[i]]);
      coeffs[term.exps[last]] = field.add(coeffs[term.exps[last]], v);
    }
    bool constant_nonzero = coeffs[0] != 0;
    for (Exponent k = 1; k <= max_exp && constant_nonzero; ++k) constant_nonzero = coeffs[k] == 0;
    if (!constant_nonzero) {
      for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t acc = 0;
        for (Exponent k = max_exp + 1; k-- > 0;) acc = field.add(field.mul(acc, x), coeffs[k]);
        if (acc == 0) {
          point[last] = x;
          total += weight(point);
        }
      }
    }
    bool done = true;
    for (std::size_t i = last; i-- > 0;) {
      if (++point[i] < (i == 0 ? first_hi : p)) {
        done = false;
        break;
      }
      point[i] = 0;
    }
    if (done) break;
  }
  return total;
}

}  // namespace

ModPCount count_points_mod_p(const IntPolynomial& f, std::uint64_t p, CountMode mode, std::uint64_t budget,
                             unsigned threads, const std::vector<std::uint32_t>& weights) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  IntPolynomial g = f;
  if (mode == CountMode::affine_cone && !g.is_zero() && !is_weighted_homogeneous(g, WeightVector::uniform(g.arity())))
    g = homogenize(g, WeightVector::uniform(g.arity())).poly;
  const std::size_t dim = g.arity();
  if (mode == CountMode::projective_weighted && weights.size() != dim)
    throw std::invalid_argument("projective count needs one weight per variable");
  if (dim == 0) throw std::invalid_argument("nothing to enumerate");
  double size = std::pow(static_cast<double>(p), static_cast<double>(dim));
  if (size > static_cast<double>(budget))
    throw BudgetExceeded("p^" + std::to_string(dim) + " exceeds the enumeration budget");

  std::vector<ModTerm> terms;
  Exponent max_exp = 0;
  for (const auto& [m, c] : g.terms()) {
    const std::uint64_t r = mod_reduce(c, p);
    if (r == 0) continue;
    terms.push_back({r, m});
    max_exp = std::max(max_exp, *std::max_element(m.begin(), m.end()));
  }

  auto weight = [&](const std::vector<std::uint64_t>& point) -> std::uint64_t {
    if (mode != CountMode::projective_weighted) return 1;
    std::uint64_t gw = 0;
    for (std::size_t i = 0; i < dim; ++i)
      if (point[i] != 0) gw = std::gcd(gw, static_cast<std::uint64_t>(weights[i]));
    if (gw == 0) return 0;
    return std::gcd(gw, p - 1);
  };

  const unsigned workers = dim > 1 ? std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(p))) : 1;
  std::vector<std::uint64_t> partial(workers, 0);
  if (workers == 1) {
    partial[0] = count_slice(terms, dim, p, max_exp, 0, p, weight);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = p * w / workers;
      const std::uint64_t hi = p * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { partial[w] = count_slice(terms, dim, p, max_exp, lo, hi, weight); });
    }
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  if (mode == CountMode::projective_weighted) {
    if (total % (p - 1) != 0) throw std::logic_error("orbit count is not integral");
    total /= p - 1;
  }
  return {p, total, mode, dim};
}

BfEstimate b_f_estimate(const IntPolynomial& f, std::uint64_t d, std::uint64_t lo, std::uint64_t hi,
                        std::optional<std::uint64_t> threshold, std::uint64_t seed) {
  if (f.is_zero() || f.content() != 1) throw std::invalid_argument("b(f) estimate needs a primitive polynomial");
  BfEstimate out;
  out.threshold = threshold.value_or(27 * d * d * d * d);
  out.upper_bound = std::max(log_abs(f.norm()) / static_cast<double>(d * d), 1.0);
  for (std::uint64_t p : primes_in_range(std::max(lo, out.threshold + 1), hi)) {
    out.tested_primes.push_back(p);
    try {
      if (!absolutely_irreducible(f, p, seed).absolutely_irreducible) {
        out.failing_primes.push_back(p);
        out.log_b += std::log(static_cast<double>(p)) / static_cast<double>(p);
      }
    } catch (const std::exception& err) {
      out.skipped_primes.emplace_back(p, err.what());
    }
  }
  return out;
}

}  // namespace wdm
