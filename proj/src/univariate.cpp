#include "wdm/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wdm {

namespace {

int sign_of(const Integer& x) { return sgn(x); }
int sign_of(__int128 x) { return (x > 0) - (x < 0); }

template <class T>
T eval(const std::vector<T>& q, const T& y) {
  T acc = 0;
  for (std::size_t i = q.size(); i-- > 0;) acc = acc * y + q[i];
  return acc;
}

/// q(y + 1) - q(y), one degree lower.
template <class T>
std::vector<T> forward_difference(const std::vector<T>& q) {
  std::vector<T> shifted = q;
  const std::size_t k = shifted.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = k - 1; j-- > i;) shifted[j] += shifted[j + 1];
  }
  for (std::size_t i = 0; i < k; ++i) shifted[i] -= q[i];
  while (!shifted.empty() && shifted.back() == 0) shifted.pop_back();
  return shifted;
}

/// First x in [a, b] with pred(x), or b + 1; pred must be monotone false->true.
template <class T, class Pred>
T first_true(T a, T b, Pred pred) {
  T lo = a;
  T hi = b + 1;
  while (lo < hi) {
    const T mid = lo + (hi - lo) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

/// Half-open range of zeros of q on [a, b], where q is monotone on the
/// integers of [a, b].
template <class T>
struct ZeroRange {
  T begin;
  T end;
};

template <class T>
ZeroRange<T> zeros_on_run(const std::vector<T>& q, const T& a, const T& b) {
  const T qa = eval(q, a);
  const T qb = eval(q, b);
  if (qa == qb) return sign_of(qa) == 0 ? ZeroRange<T>{a, b + 1} : ZeroRange<T>{b + 1, b + 1};
  if (qa < qb) {
    return {first_true(a, b, [&](const T& x) { return sign_of(eval(q, x)) >= 0; }),
            first_true(a, b, [&](const T& x) { return sign_of(eval(q, x)) > 0; })};
  }
  return {first_true(a, b, [&](const T& x) { return sign_of(eval(q, x)) <= 0; }),
          first_true(a, b, [&](const T& x) { return sign_of(eval(q, x)) < 0; })};
}

/// Sorted points L = b_0 < ... < b_r = R with q monotone on every [b_i, b_{i+1}].
template <class T>
std::vector<T> monotone_breaks(const std::vector<T>& q, const T& L, const T& R) {
  if (R - L <= 1 || q.size() <= 2) return {L, R};
  const std::vector<T> dq = forward_difference(q);
  const std::vector<T> inner = monotone_breaks<T>(dq, L, T(R - 1));
  std::set<T> pts(inner.begin(), inner.end());
  pts.insert(L);
  pts.insert(R);
  for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
    // The sign class of dq changes exactly at the ends of its zero range.
    const ZeroRange<T> run = zeros_on_run(dq, inner[i], inner[i + 1]);
    for (const T& t : {run.begin, run.end}) {
      if (t > L && t < R) pts.insert(t);
    }
  }
  return {pts.begin(), pts.end()};
}

template <class T>
std::vector<T> roots_in(const std::vector<T>& q, const T& L, const T& R) {
  std::set<T> roots;
  if (L > R) return {};
  const std::vector<T> breaks = monotone_breaks(q, L, R);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const ZeroRange<T> run = zeros_on_run(q, breaks[i], breaks[i + 1]);
    for (T y = run.begin; y < run.end; ++y) roots.insert(y);
  }
  return {roots.begin(), roots.end()};
}

}  // namespace

std::vector<Integer> integer_roots_monic(std::span<const Integer> coeffs, const Integer& bound) {
  if (coeffs.size() < 2 || coeffs.back() != 1) throw std::invalid_argument("expected a monic polynomial of degree >= 1");
  if (bound < 0) return {};
  Integer cauchy = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) cauchy = std::max<Integer>(cauchy, abs(coeffs[i]));
  cauchy += 1;
  const Integer R = std::min<Integer>(bound, cauchy);
  std::vector<Integer> q(coeffs.begin(), coeffs.end());
  return roots_in<Integer>(q, -R, R);
}

std::vector<Integer> integer_roots_monic(const IntPolynomial& p, const Integer& bound) {
  if (p.arity() != 1) throw std::invalid_argument("expected a univariate polynomial");
  if (p.is_zero()) throw std::invalid_argument("expected a monic polynomial of degree >= 1");
  std::vector<Integer> coeffs(p.degree_in(0) + 1);
  for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c;
  return integer_roots_monic(coeffs, bound);
}

bool integer_roots_monic_fast(std::span<const __int128> coeffs, std::int64_t bound, std::vector<std::int64_t>& out) {
  if (coeffs.size() < 2 || coeffs.back() != 1) throw std::invalid_argument("expected a monic polynomial of degree >= 1");
  if (bound < 0) {
    out.clear();
    return true;
  }
  double maxc = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) maxc = std::max(maxc, std::fabs(static_cast<double>(coeffs[i])));
  const double R = std::min(static_cast<double>(bound), maxc + 1);
  const std::size_t k = coeffs.size() - 1;
  // Every difference polynomial is bounded on the range by 2^k max |p|.
  double magnitude = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    magnitude += std::fabs(static_cast<double>(coeffs[i])) * std::pow(R + static_cast<double>(k) + 1, static_cast<double>(i));
  magnitude *= std::ldexp(1.0, static_cast<int>(k) + 1);
  if (!(magnitude < std::ldexp(1.0, 110))) return false;
  const __int128 r = static_cast<__int128>(R);
  std::vector<__int128> q(coeffs.begin(), coeffs.end());
  const std::vector<__int128> roots = roots_in<__int128>(q, -r, r);
  out.clear();
  for (__int128 y : roots) out.push_back(static_cast<std::int64_t>(y));
  return true;
}

std::vector<Rational> rational_roots_monic(std::span<const Rational> coeffs) {
  if (coeffs.size() < 2 || coeffs.back() != 1) throw std::invalid_argument("expected a monic polynomial of degree >= 1");
  const std::size_t k = coeffs.size() - 1;
  Integer L = 1;
  for (const Rational& c : coeffs) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  // L^k p(Z / L) is monic with integer coefficients c_i L^(k - i).
  std::vector<Integer> scaled(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    const Rational v = coeffs[i] * Rational(ipow(L, k - i));
    scaled[i] = v.get_num();
  }
  Integer cauchy = 0;
  for (std::size_t i = 0; i < k; ++i) cauchy = std::max<Integer>(cauchy, abs(scaled[i]));
  std::vector<Rational> out;
  for (const Integer& z : integer_roots_monic(scaled, cauchy + 1)) out.push_back(make_rational(z, L));
  return out;
}

}  // namespace wdm
