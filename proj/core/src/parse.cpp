#include "specjump/parse.hpp"

#include <cctype>
#include <string>

#include "specjump/error.hpp"

namespace specjump {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  Poly2 parse() {
    Poly2 p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse,
                "polynomial parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly2 expression() {
    Poly2 acc;
    if (accept('-')) {
      acc = -term();
    } else {
      accept('+');
      acc = term();
    }
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly2 term() {
    Poly2 acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly2 divisor = factor();
        if (!divisor.is_constant() || divisor.is_zero()) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc *= Rational(1) / divisor.constant_term();
      } else {
        return acc;
      }
    }
  }

  Poly2 factor() {
    if (accept('-')) return -factor();
    Poly2 base = primary();
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  unsigned exponent() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  Poly2 primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Poly2 inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly2(Rational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    for (int var = 0; var < 2; ++var) {
      const std::string_view name = names_[static_cast<std::size_t>(var)];
      if (text_.substr(pos_, name.size()) == name) {
        const std::size_t end = pos_ + name.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                                   text_[end] == '_')) {
          continue;
        }
        pos_ = end;
        return var == 0 ? Poly2::x() : Poly2::y();
      }
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VariableNames names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly2 parse_poly(std::string_view text, const VariableNames& names) {
  return Parser(text, names).parse();
}

}  // namespace specjump
