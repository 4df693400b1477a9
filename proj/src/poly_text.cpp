#include "cospec/poly_text.hpp"

#include <cctype>

#include "cospec/error.hpp"

namespace cospec {

std::string to_expanded_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const mpz_class& c = p.coeff(d);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const mpz_class mag = abs(c);
    if (mag != 1 || d == 0) out += mag.get_str();
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

std::string to_factored_string(const FactoredPoly& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const Factor& factor : f.factors) {
    if (factor.base == IntPolynomial::x())
      out += "x";
    else
      out += "(" + to_expanded_string(factor.base) + ")";
    if (factor.multiplicity != 1) out += "^" + std::to_string(factor.multiplicity);
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  IntPolynomial parse() {
    IntPolynomial p = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  IntPolynomial expression() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    IntPolynomial acc = term();
    if (negate) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      const bool minus = s_[pos_++] == '-';
      IntPolynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  IntPolynomial term() {
    IntPolynomial acc = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '(' || c == 'x') {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  IntPolynomial factor() {
    IntPolynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      if (pos_ - start > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  IntPolynomial primary() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return IntPolynomial::x();
    }
    if (c == '(') {
      ++pos_;
      IntPolynomial inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return IntPolynomial::constant(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    fail(c == '\0' ? "unexpected end of input" : "expected a number, 'x' or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace cospec
