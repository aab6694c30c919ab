#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wdm/polynomial.hpp"
#include "wdm/text.hpp"

namespace wdm::testing {

inline IntPolynomial P(const std::string& text, std::size_t arity) { return parse_poly(text, VarNames::cover(arity - 1)); }

/// Random polynomial with `terms` terms, exponents < max_exp, coefficients in [-c, c].
inline IntPolynomial random_poly(std::mt19937_64& rng, std::size_t arity, int terms, unsigned max_exp, int c) {
  IntPolynomial f(arity);
  std::uniform_int_distribution<unsigned> ex(0, max_exp - 1);
  std::uniform_int_distribution<int> co(-c, c);
  for (int t = 0; t < terms; ++t) {
    Monomial m(arity);
    for (auto& x : m) x = ex(rng);
    f.add_term(m, Integer(co(rng)));
  }
  return f;
}

/// Calls visit on every integer point of [-B, B]^arity.
inline void for_each_point(std::size_t arity, std::int64_t B, const std::function<void(const std::vector<Integer>&)>& visit) {
  std::vector<Integer> x(arity, Integer(-B));
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < arity && x[i] == B) x[i++] = -B;
    if (i == arity) return;
    x[i] += 1;
  }
}

/// Zeros of f in [-B, B]^arity by plain evaluation.
inline std::uint64_t brute_zeros(const IntPolynomial& f, std::int64_t B) {
  std::uint64_t count = 0;
  for_each_point(f.arity(), B, [&](const std::vector<Integer>& x) {
    if (f.evaluate(x) == 0) ++count;
  });
  return count;
}

}  // namespace wdm::testing
