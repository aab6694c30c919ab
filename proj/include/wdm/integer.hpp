#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wdm {

using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Exponent of the largest power of p dividing a nonzero integer.
unsigned long valuation(const Integer& value, unsigned long p);

bool is_prime(std::uint64_t n);
/// Primes in the closed range [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);
/// Prime factors of |n| without multiplicity, ascending; empty for |n| <= 1.
std::vector<Integer> prime_factors(const Integer& n);

/// Residue in [0, p).
std::uint64_t mod_reduce(const Integer& value, std::uint64_t p);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

/// Natural log of |x| for arbitrarily large integers; x must be nonzero.
double log_abs(const Integer& x);

/// Canonicalized rational (mpq_class needs this after raw construction).
inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace wdm
