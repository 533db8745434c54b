#ifndef Z2DYN_PADIC_HPP
#define Z2DYN_PADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace z2dyn {

/// Arbitrary-precision signed integer. All exact values in the engine
/// (polynomial coefficients, orbit points, valuations' arguments) live here.
using ExactInt = boost::multiprecision::cpp_int;

/// Exact rational, used for measure bookkeeping of balls.
using Rational = boost::multiprecision::cpp_rational;

/// 2^k as an ExactInt. k must be nonnegative.
ExactInt pow2(long k);

/// Raised when an operation would enumerate a residue space larger than the
/// configured level guard.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 2-adic valuation of an integer: Finite(k) for nonzero values,
/// Infinite for zero. Infinite compares greater than every finite value.
class Valuation {
 public:
  static Valuation finite(long k);
  static Valuation infinite();

  bool is_finite() const { return finite_; }
  /// The exponent; throws std::logic_error when infinite.
  long get() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

  /// Sum of valuations, absorbing on Infinite. Matches v2(a*b) = v2(a)+v2(b).
  friend Valuation operator+(const Valuation& a, const Valuation& b);

  std::string str() const;

 private:
  Valuation(bool finite, long value) : finite_(finite), value_(value) {}
  bool finite_;
  long value_;
};

/// v2(a): exponent of the largest power of 2 dividing a; Infinite iff a = 0.
Valuation v2(const ExactInt& a);

/// An element of Z/2^L Z together with its level L. The computational
/// stand-in for a 2-adic integer known to precision L.
///
/// Arithmetic requires equal levels; mixing levels throws std::logic_error
/// rather than coercing.
class Residue {
 public:
  /// value must already lie in [0, 2^level); use reduce() for the canonical
  /// wrapping map. level must be >= 1.
  Residue(ExactInt value, int level);

  const ExactInt& value() const { return value_; }
  int level() const { return level_; }

  friend bool operator==(const Residue&, const Residue&) = default;
  /// Ordered by (level, value) so residue sets have a canonical order.
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b);

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);

  std::string str() const;

 private:
  ExactInt value_;
  int level_;
};

/// Canonical map Z -> Z/2^L Z; negative inputs wrap (-1 -> 2^L - 1).
/// level = 0 is rejected with std::invalid_argument.
Residue reduce(const ExactInt& a, int level);

/// The two residues at level L+1 congruent to r mod 2^L:
/// r.value and r.value + 2^L.
std::pair<Residue, Residue> children(const Residue& r);

}  // namespace z2dyn

#endif  // Z2DYN_PADIC_HPP
