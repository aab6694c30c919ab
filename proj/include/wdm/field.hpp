#pragma once

#include <cstdint>
#include <stdexcept>

#include "wdm/integer.hpp"

namespace wdm {

/// Q with exact rationals.
struct RationalField {
  using Element = Rational;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from(const Integer& x) const { return Rational(x); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  bool is_zero(const Element& a) const { return a == 0; }
  /// Characteristic; 0 for Q.
  std::uint64_t characteristic() const { return 0; }
};

/// F_p for a prime p < 2^63, elements kept in [0, p).
struct PrimeField {
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("field modulus must be prime");
  }

  std::uint64_t p;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from(const Integer& x) const { return mod_reduce(x, p); }
  Element from_signed(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<Element>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }
  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element pow(Element a, std::uint64_t k) const {
    Element r = 1;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return pow(a, p - 2);
  }
  bool is_zero(Element a) const { return a == 0; }
  std::uint64_t characteristic() const { return p; }
};

}  // namespace wdm
