#include "z2dyn/parser.hpp"

#include <cctype>
#include <sstream>

namespace z2dyn {

namespace {

// Exponents are capped so a typo cannot allocate a gigantic coefficient
// vector; polynomials that large are outside anything the engine can use.
constexpr long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  IntPolynomial run() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    IntPolynomial p = expr();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  IntPolynomial expr() {
    IntPolynomial acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  IntPolynomial term() {
    IntPolynomial acc = unary();
    while (eat('*')) acc = acc * unary();
    return acc;
  }

  IntPolynomial unary() {
    if (eat('-')) return IntPolynomial({ExactInt(-1)}) * unary();
    if (eat('+')) return unary();
    return power();
  }

  IntPolynomial power() {
    IntPolynomial base = primary();
    if (!eat('^')) return base;
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("exponent must be a nonnegative integer literal", at);
    const ExactInt e = integer_literal();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    const long n = static_cast<long>(e);
    // Exponentiation by squaring is pointless here; repeated multiplication
    // over at most kMaxExponent steps keeps the code obvious.
    IntPolynomial acc({ExactInt(1)});
    for (long i = 0; i < n; ++i) acc = acc * base;
    return acc;
  }

  IntPolynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPolynomial inner = expr();
      if (!eat(')')) throw ParseError("missing ')'", pos_);
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return IntPolynomial({ExactInt(0), ExactInt(1)});
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return IntPolynomial({integer_literal()});
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unknown identifier '") + c + "' (only x is allowed)", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  ExactInt integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return ExactInt(text_.substr(start, pos_ - start));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_poly(const std::string& text) { return Parser(text).run(); }

std::string print_poly(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = f.degree(); d >= 0; --d) {
    const ExactInt& c = f.coeff(d);
    if (c == 0) continue;
    const bool neg = c < 0;
    const ExactInt mag = abs(c);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (d == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "x";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace z2dyn
