#include "z2dyn/chebyshev.hpp"

#include <stdexcept>
#include <utility>

namespace z2dyn {

IntPolynomial chebyshev_recurrence(long m) {
  if (m < 0) throw std::invalid_argument("chebyshev_recurrence: m must be >= 0");
  IntPolynomial prev({ExactInt(1)});              // T_0
  if (m == 0) return prev;
  IntPolynomial cur({ExactInt(0), ExactInt(1)});  // T_1 = x
  const IntPolynomial two_x({ExactInt(0), ExactInt(2)});
  for (long i = 1; i < m; ++i) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ExactInt binomial(long n, long k) {
  if (k < 0 || k > n) return ExactInt(0);
  if (k > n - k) k = n - k;
  ExactInt acc(1);
  for (long i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;  // exact: acc is C(n-k+i, i) * i before the division
  }
  return acc;
}

IntPolynomial chebyshev_closed_form(long m) {
  if (m < 1) throw std::invalid_argument("chebyshev_closed_form: m must be >= 1");
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(m) + 1, ExactInt(0));
  for (long k = 0; k <= m / 2; ++k) {
    // (−1)^k · m/(m−k) · C(m−k, k) · 2^{m−2k−1}; the exponent is −1 exactly
    // when m is even and k = m/2.
    Rational term(m, m - k);
    term *= Rational(binomial(m - k, k));
    const long e = m - 2 * k - 1;
    if (e >= 0)
      term *= Rational(pow2(e));
    else
      term /= 2;
    if (k % 2 != 0) term = -term;
    if (denominator(term) != 1)
      throw std::logic_error("chebyshev_closed_form: non-integral term");
    coeffs[static_cast<std::size_t>(m - 2 * k)] = numerator(term);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace z2dyn
