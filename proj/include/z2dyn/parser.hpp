#ifndef Z2DYN_PARSER_HPP
#define Z2DYN_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "z2dyn/polynomial.hpp"

namespace z2dyn {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses polynomial expressions in x over the integers: literals of any
/// size, + - * ^ with conventional precedence, parentheses. Exponents must
/// be nonnegative integer literals. E.g. "4*x^3 - 3*x".
IntPolynomial parse_poly(const std::string& text);

/// Canonical rendering, highest degree first: "4*x^3 - 3*x + 8".
/// parse_poly(print_poly(f)) == f.
std::string print_poly(const IntPolynomial& f);

}  // namespace z2dyn

#endif  // Z2DYN_PARSER_HPP
