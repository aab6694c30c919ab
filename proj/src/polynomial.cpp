#include "wdm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wdm {

std::uint64_t total_degree(const Monomial& mono) {
  return std::accumulate(mono.begin(), mono.end(), std::uint64_t{0});
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = wdm::total_degree(a);
  const auto db = wdm::total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

bool monomial_divides(const Monomial& divisor, const Monomial& dividend) {
  for (std::size_t i = 0; i < divisor.size(); ++i)
    if (divisor[i] > dividend[i]) return false;
  return true;
}

namespace {

void check_arity(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("polynomial arity mismatch");
}

}  // namespace

IntPolynomial IntPolynomial::constant(std::size_t arity, const Integer& c) {
  IntPolynomial p(arity);
  p.add_term(Monomial(arity, 0), c);
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::invalid_argument("variable index out of range");
  Monomial m(arity, 0);
  m[index] = 1;
  return term(std::move(m), 1);
}

IntPolynomial IntPolynomial::term(Monomial mono, const Integer& c) {
  IntPolynomial p(mono.size());
  p.add_term(mono, c);
  return p;
}

bool IntPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && wdm::total_degree(terms_.begin()->first) == 0;
}

Integer IntPolynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Integer(0) : it->second;
}

const Monomial& IntPolynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Integer& IntPolynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void IntPolynomial::add_term(const Monomial& mono, const Integer& c) {
  if (mono.size() != arity_) throw std::invalid_argument("monomial length does not match arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  check_arity(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  check_arity(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  check_arity(a, b);
  IntPolynomial out(a.arity());
  Monomial m(a.arity());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(arity_, 1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::uint64_t IntPolynomial::total_degree() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  // Graded order: the leading term has maximal total degree.
  return wdm::total_degree(terms_.begin()->first);
}

std::uint64_t IntPolynomial::weighted_degree(const WeightVector& w) const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
  if (w.size() != arity_) throw std::invalid_argument("weight vector length does not match arity");
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, w.degree(m));
  return d;
}

Exponent IntPolynomial::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
  return d;
}

std::vector<std::size_t> IntPolynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < arity_; ++v)
    if (degree_in(v) > 0) out.push_back(v);
  return out;
}

Integer IntPolynomial::norm() const {
  Integer n = 0;
  for (const auto& [m, c] : terms_)
    if (abs(c) > n) n = abs(c);
  return n;
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  IntPolynomial out = *this;
  const Integer g = content();
  if (g > 1)
    for (auto& [m, c] : out.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntPolynomial IntPolynomial::sign_normalized() const {
  if (!terms_.empty() && leading_coefficient() < 0) return -*this;
  return *this;
}

IntPolynomial IntPolynomial::derivative(std::size_t var) const {
  if (var >= arity_) throw std::invalid_argument("variable index out of range");
  IntPolynomial out(arity_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    --dm[var];
    out.add_term(dm, c * m[var]);
  }
  return out;
}

namespace {

template <class T>
T evaluate_generic(const IntPolynomial::TermMap& terms, std::span<const T> point) {
  // Power tables per variable, grown on demand.
  std::vector<std::vector<T>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(T(1));
  T sum = 0;
  T prod;
  for (const auto& [m, c] : terms) {
    prod = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& table = powers[i];
      while (table.size() <= m[i]) table.push_back(table.back() * point[i]);
      prod *= table[m[i]];
    }
    sum += prod;
  }
  return sum;
}

}  // namespace

Integer IntPolynomial::evaluate(std::span<const Integer> point) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong length");
  return evaluate_generic<Integer>(terms_, point);
}

Rational IntPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong length");
  Rational r = evaluate_generic<Rational>(terms_, point);
  r.canonicalize();
  return r;
}

std::uint64_t IntPolynomial::evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const {
  if (point.size() != arity_) throw std::invalid_argument("evaluation point has wrong length");
  using u128 = unsigned __int128;
  std::uint64_t sum = 0;
  for (const auto& [m, c] : terms_) {
    std::uint64_t prod = mod_reduce(c, p);
    for (std::size_t i = 0; i < m.size() && prod != 0; ++i) {
      for (Exponent k = 0; k < m[i]; ++k) prod = static_cast<std::uint64_t>((u128)prod * point[i] % p);
    }
    sum = static_cast<std::uint64_t>(((u128)sum + prod) % p);
  }
  return sum;
}

IntPolynomial IntPolynomial::substitute(std::span<const IntPolynomial> images) const {
  if (images.size() != arity_) throw std::invalid_argument("need one image per variable");
  const std::size_t target = images.empty() ? 0 : images[0].arity();
  for (const auto& img : images)
    if (img.arity() != target) throw std::invalid_argument("substitution images differ in arity");
  std::vector<std::vector<IntPolynomial>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) powers[i].push_back(constant(target, 1));
  IntPolynomial out(target);
  for (const auto& [m, c] : terms_) {
    IntPolynomial prod = constant(target, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (m[i] == 0) continue;
      auto& table = powers[i];
      while (table.size() <= m[i]) table.push_back(table.back() * images[i]);
      prod *= table[m[i]];
    }
    out += prod;
  }
  return out;
}

IntPolynomial IntPolynomial::insert_variable(std::size_t pos) const {
  if (pos > arity_) throw std::invalid_argument("insert position out of range");
  IntPolynomial out(arity_ + 1);
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm.insert(nm.begin() + static_cast<std::ptrdiff_t>(pos), 0);
    out.terms_.emplace(std::move(nm), c);
  }
  return out;
}

IntPolynomial IntPolynomial::remove_variable(std::size_t pos) const {
  if (pos >= arity_) throw std::invalid_argument("variable index out of range");
  IntPolynomial out(arity_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[pos] != 0) throw std::invalid_argument("cannot remove a variable that occurs");
    Monomial nm = m;
    nm.erase(nm.begin() + static_cast<std::ptrdiff_t>(pos));
    out.terms_.emplace(std::move(nm), c);
  }
  return out;
}

IntPolynomial IntPolynomial::permute(std::span<const std::size_t> perm) const {
  if (perm.size() != arity_) throw std::invalid_argument("permutation has wrong length");
  IntPolynomial out(arity_);
  for (const auto& [m, c] : terms_) {
    Monomial nm(arity_);
    for (std::size_t i = 0; i < arity_; ++i) nm.at(perm[i]) = m[i];
    out.add_term(nm, c);
  }
  return out;
}

std::vector<IntPolynomial> IntPolynomial::coefficients_in(std::size_t var) const {
  std::vector<IntPolynomial> out(degree_in(var) + 1, IntPolynomial(arity_));
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm[var] = 0;
    out[m[var]].add_term(nm, c);
  }
  return out;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& g, const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.arity() != g.arity()) throw std::invalid_argument("polynomial arity mismatch");
  if (g.is_zero()) return IntPolynomial(g.arity());
  const Integer fc = f.content();
  if (!mpz_divisible_p(g.content().get_mpz_t(), fc.get_mpz_t())) return std::nullopt;
  const IntPolynomial fp = f.primitive_part();
  const Monomial& lead_m = fp.leading_monomial();
  const Integer& lead_c = fp.leading_coefficient();

  IntPolynomial rest = g;
  IntPolynomial quotient(g.arity());
  Monomial qm(g.arity());
  while (!rest.is_zero()) {
    const Monomial& rm = rest.leading_monomial();
    const Integer& rc = rest.leading_coefficient();
    if (!monomial_divides(lead_m, rm)) return std::nullopt;
    // Gauss: with fp primitive, any quotient in Q[x] of an integral g is integral.
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    for (std::size_t i = 0; i < qm.size(); ++i) qm[i] = rm[i] - lead_m[i];
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    const IntPolynomial t = IntPolynomial::term(qm, qc);
    quotient += t;
    rest -= t * fp;
  }
  // g = fp * quotient = f * (quotient / fc); fc divides content(quotient).
  IntPolynomial out(g.arity());
  for (const auto& [m, c] : quotient.terms()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), fc.get_mpz_t());
    out.add_term(m, q);
  }
  return out;
}

bool divides(const IntPolynomial& f, const IntPolynomial& g) { return exact_quotient(g, f).has_value(); }

}  // namespace wdm
