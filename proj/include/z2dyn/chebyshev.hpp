#ifndef Z2DYN_CHEBYSHEV_HPP
#define Z2DYN_CHEBYSHEV_HPP

#include "z2dyn/polynomial.hpp"

namespace z2dyn {

/// T_m via the three-term recurrence T_{m+1} = 2x·T_m − T_{m−1},
/// T_0 = 1, T_1 = x. Integer arithmetic throughout.
IntPolynomial chebyshev_recurrence(long m);

/// T_m via the explicit expansion
///   T_m(x) = Σ_{k=0}^{⌊m/2⌋} (−1)^k · m/(m−k) · C(m−k,k) · 2^{m−2k−1} · x^{m−2k}
/// for m ≥ 1. Each term is computed as an exact rational (the k = m/2 term of
/// even m carries a 2^{−1}) and must simplify to an integer; a non-integral
/// term throws logic_error. Serves as an independent cross-check of the
/// recurrence construction.
IntPolynomial chebyshev_closed_form(long m);

/// C(n, k) by the multiplicative formula, exact.
ExactInt binomial(long n, long k);

}  // namespace z2dyn

#endif  // Z2DYN_CHEBYSHEV_HPP
