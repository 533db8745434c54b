#ifndef Z2DYN_POLYNOMIAL_HPP
#define Z2DYN_POLYNOMIAL_HPP

#include <cstdint>
#include <vector>

#include "z2dyn/padic.hpp"

namespace z2dyn {

/// Polynomial with exact integer coefficients, stored c_0 .. c_d with
/// trailing zeros stripped. The zero polynomial has degree() == -1.
class IntPolynomial {
 public:
  static constexpr long kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coeffs);

  /// c * x^degree
  static IntPolynomial monomial(ExactInt c, long degree);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k; zero beyond the degree.
  const ExactInt& coeff(long k) const;
  const std::vector<ExactInt>& coeffs() const { return coeffs_; }

  /// Exact evaluation (Horner).
  ExactInt eval(const ExactInt& x) const;

  /// f(x) reduced at the level of x; coefficients are reduced at that level.
  Residue eval_mod(const Residue& x) const;

  IntPolynomial derivative() const;

  /// Exact coefficients of this(g(x)).
  IntPolynomial compose(const IntPolynomial& g) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const ExactInt& c, const IntPolynomial& f);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<ExactInt> coeffs_;  // coeffs_[k] = coefficient of x^k
};

/// Evaluator for f mod 2^level with level <= 64: coefficients are reduced
/// once and evaluation runs on machine words (wraparound multiplication is
/// exact mod 2^64, so masking gives the value mod 2^level). Used by the
/// enumeration-heavy paths; results agree with eval_mod by construction.
class ReducedPoly {
 public:
  ReducedPoly(const IntPolynomial& f, int level);

  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = (acc * x + coeffs_[i]) & mask_;
    return acc;
  }

  int level() const { return level_; }

 private:
  int level_;
  std::uint64_t mask_;
  std::vector<std::uint64_t> coeffs_;
};

}  // namespace z2dyn

#endif  // Z2DYN_POLYNOMIAL_HPP
