#include "wdm/text.hpp"

#include <cctype>
#include <limits>

namespace wdm {

namespace {

constexpr std::uint64_t kMaxExponent = 1U << 16;

bool mentions(std::string_view text, std::string_view var) {
  for (std::size_t pos = text.find(var); pos != std::string_view::npos; pos = text.find(var, pos + 1)) {
    const std::size_t end = pos + var.size();
    const bool digit_follows = end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]));
    const bool alnum_before = pos > 0 && std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    if (!digit_follows && !alnum_before) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, const VarNames& names) : text_(text), names_(names) {}

  IntPolynomial parse() {
    IntPolynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Consumes '-' or U+2212.
  bool eat_minus() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPolynomial expression() {
    IntPolynomial acc = unary();
    for (;;) {
      if (eat('+')) {
        acc += unary();
      } else if (eat_minus()) {
        acc -= unary();
      } else {
        return acc;
      }
    }
  }

  IntPolynomial unary() {
    if (eat_minus()) return -unary();
    if (eat('+')) return unary();
    return product();
  }

  IntPolynomial product() {
    IntPolynomial acc = power();
    while (eat('*')) acc *= power();
    return acc;
  }

  IntPolynomial power() {
    IntPolynomial base = atom();
    if (eat('^')) {
      skip_space();
      const std::size_t start = pos_;
      std::uint64_t k = 0;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected a non-negative integer exponent", pos_);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (k > kMaxExponent) throw ParseError("exponent overflow", start);
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  IntPolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPolynomial inner = expression();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return IntPolynomial::constant(names_.size(), Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const std::size_t index = names_.find(name);
      if (index == names_.size()) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return IntPolynomial::variable(names_.size(), index);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

VarNames VarNames::cover(std::size_t n) {
  std::vector<std::string> names{"Y"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return VarNames(std::move(names));
}

VarNames VarNames::plain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return VarNames(std::move(names));
}

VarNames VarNames::projective(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return VarNames(std::move(names));
}

VarNames VarNames::with_x0(const VarNames& base) {
  std::vector<std::string> names{"X0"};
  names.insert(names.end(), base.names_.begin(), base.names_.end());
  return VarNames(std::move(names));
}

VarNames VarNames::infer(std::string_view text, std::size_t arity) {
  if (arity == 0) return VarNames({});
  const bool has_y = mentions(text, "Y");
  const bool has_x0 = mentions(text, "X0");
  if (has_y && has_x0) return with_x0(cover(arity >= 2 ? arity - 2 : 0));
  if (has_y) return cover(arity - 1);
  if (has_x0) return projective(arity - 1);
  return plain(arity);
}

std::size_t VarNames::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

IntPolynomial parse_poly(std::string_view text, const VarNames& names) {
  return Parser(text, names).parse();
}

IntPolynomial parse_poly(std::string_view text, std::size_t arity) {
  const VarNames names = VarNames::infer(text, arity);
  if (names.size() != arity) throw std::invalid_argument("arity too small for the variables used");
  return parse_poly(text, names);
}

std::string to_string(const IntPolynomial& f, const VarNames& names) {
  if (names.size() != f.arity()) throw std::invalid_argument("variable names do not match arity");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += vars;
    } else {
      out += mag.get_str() + "*" + vars;
    }
  }
  return out;
}

std::string to_string(const IntPolynomial& f) {
  if (f.arity() == 0) return f.is_zero() ? "0" : f.leading_coefficient().get_str();
  return to_string(f, VarNames::cover(f.arity() - 1));
}

}  // namespace wdm
