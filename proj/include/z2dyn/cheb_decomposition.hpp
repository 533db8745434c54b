#ifndef Z2DYN_CHEB_DECOMPOSITION_HPP
#define Z2DYN_CHEB_DECOMPOSITION_HPP

#include <string>
#include <variant>
#include <vector>

#include "z2dyn/chebyshev.hpp"
#include "z2dyn/decomposition.hpp"

namespace z2dyn {

/// Odd m >= 3 written as m = 2^s*q + sign with q odd and sign = ±1.
/// s = max(v2(m+1), v2(m-1)) >= 2: exactly one of m±1 is divisible by 4.
struct PowerSplit {
  long m;
  int s;
  long q;
  int sign;
};

PowerSplit split_near_power_of_two(long m);

/// Valuation pattern of T_m's odd-degree coefficients, for odd m:
/// writing T_m = sum_i c_{2i+1} x^{2i+1}, the pattern is v2(c_1) = 0,
/// v2(c_3) = s, and v2(c_{2i+1}) >= s+1 for all i > 1 (vacuous for m = 3).
/// This pattern is what drives the displacement valuations underlying the
/// explicit decomposition.
struct CoeffValuationReport {
  long m;
  int s;
  bool pass;
  std::vector<long> odd_coeff_v2;  // index i -> v2(c_{2i+1}), i = 0..(m-1)/2
  std::vector<std::string> violations;
};

CoeffValuationReport check_coeff_valuations(long m);

/// The closed-form decomposition of T_m for odd m, truncated to a budget:
/// fixed points 0, 1, -1; three families of single-ball minimal components
///   around 0:  2^n(1+2i) + 2^{n+s} Z_2        (n >= 1, 0 <= i < 2^{s-1}),
///   around 1:  1 + 2^n(1+2i) + 2^{n+s+1} Z_2  (n >= 2, 0 <= i < 2^s),
///   around -1: -1 + 2^n(1+2i) + 2^{n+s+1} Z_2 (n >= 2, 0 <= i < 2^s),
/// materialized while the ball level fits the budget; and one pending
/// residual ball per fixed point covering the unmaterialized tail of each
/// family: 2^{budget-s+1} Z_2 and ±1 + 2^{budget-s} Z_2. Components plus
/// pending balls tile Z_2 exactly (the fixed points have measure zero).
struct PredictedDecomposition {
  long m;
  int s;
  int budget;
  std::vector<ExactInt> fixed_points;        // {0, 1, -1}
  std::vector<MinimalComponent> components;  // all singleton balls
  std::vector<Ball> pending;
};

/// For even m the decomposition is one attracting basin: all of Z_2 drawn to
/// the fixed point 1.
struct EvenPrediction {
  long m;
  ExactInt attracting_fixed_point;  // always 1
};

/// Requires m >= 2; odd m additionally requires budget >= s+2 so at least
/// the first family materializes.
std::variant<PredictedDecomposition, EvenPrediction> predict_decomposition(long m, int budget);

/// Component and pending balls of a prediction, for tiling checks.
std::vector<Ball> prediction_balls(const PredictedDecomposition& p);

/// Outcome of comparing decompose(T_m, budget) with the closed-form
/// prediction. Odd m: exact ball-set matching of components, fixed-point and
/// residual accounting, plus independent re-certification of every matched
/// component by the minimality oracle. Even m: single-basin shape plus the
/// attraction oracle.
struct VerificationReport {
  long m;
  int budget;
  bool odd_case;
  bool pass;
  long matched;                       // components agreeing on both sides
  std::vector<Ball> missing;          // predicted, absent from engine output
  std::vector<Ball> extra;            // engine components outside prediction ∪ pending
  bool fixed_points_exact;            // T_m fixes 0, 1, -1 (odd) / 1 (even) exactly
  bool periodic_localized;            // odd: engine periodic balls = {0,1,-1} at budget
  bool residual_matches;              // odd: leftover balls fill the pending region exactly
  bool recertified;                   // matched components re-pass the minimality oracle
  bool basin_ok;                      // even: one basin onto 1, oracle-confirmed
  std::vector<std::string> failures;  // human-readable description of each failed check
};

VerificationReport verify_decomposition(long m, int budget, int guard = kDefaultLevelGuard);

}  // namespace z2dyn

#endif  // Z2DYN_CHEB_DECOMPOSITION_HPP
