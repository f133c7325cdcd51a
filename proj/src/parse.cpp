#include "pellcf/parse.hpp"

#include <cctype>

namespace pellcf {

ParseError::ParseError(const std::string& what, size_t pos)
    : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (peek() == '/') {
        size_t at = pos_;
        ++pos_;
        Poly d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (!d.is_constant()) throw ParseError("division by a non-constant polynomial", at);
        acc /= d.coeff(0);
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base_value = base();
    if (peek() == '^') {
      ++pos_;
      unsigned long e = exponent();
      base_value = base_value.pow(static_cast<unsigned>(e));
    }
    return base_value;
  }

  unsigned long exponent() {
    skip_ws();
    size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("exponent must be a nonnegative integer", at);
    unsigned long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (e > 65535) throw ParseError("exponent too large", at);
      ++pos_;
    }
    return e;
  }

  Poly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return Poly::t();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(integer());
    fail("expected '(', 't' or a number");
  }

  Rat integer() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    return Rat(mpz_class(digits, 10));
  }
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace pellcf
