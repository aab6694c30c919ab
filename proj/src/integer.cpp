#include "wdm/integer.hpp"

#include <cmath>
#include <stdexcept>

namespace wdm {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  return make_rational(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

unsigned long valuation(const Integer& value, unsigned long p) {
  if (value == 0) throw std::invalid_argument("valuation of zero is undefined");
  if (p < 2) throw std::invalid_argument("valuation needs p >= 2");
  Integer rest = value;
  unsigned long v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  if (lo < 2) lo = 2;
  if (hi <= 50'000'000) {
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
      if (composite[i]) continue;
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (std::uint64_t i = lo; i <= hi; ++i)
      if (!composite[i]) out.push_back(i);
    return out;
  }
  for (std::uint64_t i = lo; i <= hi; ++i)
    if (is_prime(i)) out.push_back(i);
  return out;
}

std::vector<Integer> prime_factors(const Integer& n) {
  std::vector<Integer> out;
  Integer rest = abs(n);
  if (rest <= 1) return out;
  for (Integer q = 2; q * q <= rest; ++q) {
    if (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
      out.push_back(q);
      while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) rest /= q;
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

std::uint64_t mod_reduce(const Integer& value, std::uint64_t p) {
  return mpz_fdiv_ui(value.get_mpz_t(), p);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

double log_abs(const Integer& x) {
  if (x == 0) throw std::invalid_argument("log of zero");
  long exp = 0;
  double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exp) * std::log(2.0);
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace wdm
