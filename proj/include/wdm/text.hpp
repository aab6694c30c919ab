#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wdm/polynomial.hpp"

namespace wdm {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Variable names for parsing and printing, index i named names()[i].
class VarNames {
 public:
  explicit VarNames(std::vector<std::string> names) : names_(std::move(names)) {}

  /// Y, X1, ..., Xn.
  static VarNames cover(std::size_t n);
  /// X1, ..., Xn.
  static VarNames plain(std::size_t n);
  /// X0, X1, ..., Xn.
  static VarNames projective(std::size_t n);
  /// X0 followed by `base`: the naming after homogenization or lifting.
  static VarNames with_x0(const VarNames& base);

  /// Chooses a scheme from the variables that occur in `text`:
  /// Y present, X0 absent -> Y, X1..; Y and X0 -> X0, Y, X1..;
  /// X0 only -> X0, X1..; neither -> X1, X2...
  static VarNames infer(std::string_view text, std::size_t arity);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  /// Index of `name`, or size() when unknown.
  std::size_t find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

/// Grammar: integers, variables, + - * ^ and parentheses; whitespace is
/// ignored. The Unicode minus sign U+2212 is accepted as '-'.
IntPolynomial parse_poly(std::string_view text, const VarNames& names);
/// Names chosen with VarNames::infer.
IntPolynomial parse_poly(std::string_view text, std::size_t arity);

/// Canonical text: terms in TermOrder, e.g. "Y^2 - X1*X2". "0" for zero.
std::string to_string(const IntPolynomial& f, const VarNames& names);
/// Uses VarNames::cover(arity - 1).
std::string to_string(const IntPolynomial& f);

}  // namespace wdm
