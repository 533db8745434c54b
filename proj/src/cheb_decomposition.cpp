#include "z2dyn/cheb_decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace z2dyn {

PowerSplit split_near_power_of_two(long m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("split_near_power_of_two: need odd m >= 3");
  const long vplus = v2(ExactInt(m + 1)).get();
  const long vminus = v2(ExactInt(m - 1)).get();
  // m+1 and m-1 differ by 2, so exactly one of them is divisible by 4.
  const int s = static_cast<int>(std::max(vplus, vminus));
  const int sign = (vplus > vminus) ? -1 : +1;
  const long q = (m - sign) >> s;
  return PowerSplit{m, s, q, sign};
}

CoeffValuationReport check_coeff_valuations(long m) {
  const PowerSplit ps = split_near_power_of_two(m);
  const IntPolynomial T = chebyshev_recurrence(m);

  CoeffValuationReport rep;
  rep.m = m;
  rep.s = ps.s;
  rep.pass = true;

  auto fail = [&rep](const std::string& msg) {
    rep.pass = false;
    rep.violations.push_back(msg);
  };

  for (long d = 0; d <= m; d += 2)
    if (T.coeff(d) != 0) fail("even-degree coefficient x^" + std::to_string(d) + " is nonzero");

  const long k = (m - 1) / 2;
  for (long i = 0; i <= k; ++i) {
    const Valuation v = v2(T.coeff(2 * i + 1));
    if (!v.is_finite()) {
      fail("coefficient of x^" + std::to_string(2 * i + 1) + " vanishes");
      rep.odd_coeff_v2.push_back(-1);
      continue;
    }
    rep.odd_coeff_v2.push_back(v.get());
  }

  if (rep.odd_coeff_v2.size() == static_cast<std::size_t>(k + 1)) {
    if (rep.odd_coeff_v2[0] != 0) fail("v2(c_1) != 0: the linear coefficient must be odd");
    if (k >= 1 && rep.odd_coeff_v2[1] != ps.s)
      fail("v2(c_3) = " + std::to_string(rep.odd_coeff_v2[1]) + ", expected s = " +
           std::to_string(ps.s));
    for (long i = 2; i <= k; ++i)
      if (rep.odd_coeff_v2[static_cast<std::size_t>(i)] < ps.s + 1)
        fail("v2(c_" + std::to_string(2 * i + 1) + ") = " +
             std::to_string(rep.odd_coeff_v2[static_cast<std::size_t>(i)]) +
             " < s+1 = " + std::to_string(ps.s + 1));
  }
  return rep;
}

std::vector<Ball> prediction_balls(const PredictedDecomposition& p) {
  std::vector<Ball> out;
  for (const auto& c : p.components) out.insert(out.end(), c.balls.begin(), c.balls.end());
  out.insert(out.end(), p.pending.begin(), p.pending.end());
  return out;
}

std::variant<PredictedDecomposition, EvenPrediction> predict_decomposition(long m, int budget) {
  if (m < 2) throw std::invalid_argument("predict_decomposition: need m >= 2");
  if (m % 2 == 0) return EvenPrediction{m, ExactInt(1)};

  const PowerSplit ps = split_near_power_of_two(m);
  const int s = ps.s;
  if (budget < s + 2)
    throw std::invalid_argument("predict_decomposition: budget must be >= s+2 = " +
                                std::to_string(s + 2));

  PredictedDecomposition pred;
  pred.m = m;
  pred.s = s;
  pred.budget = budget;
  pred.fixed_points = {ExactInt(0), ExactInt(1), ExactInt(-1)};

  auto add_component = [&pred](const ExactInt& center, int level) {
    Ball ball{Residue(center, level)};
    pred.components.push_back({{ball}, 1, ComponentStatus::ProvenStrongGrowth});
  };

  // Around 0: centers 2^n(1+2i) at level n+s.
  for (int n = 1; n + s <= budget; ++n)
    for (long i = 0; i < (1L << (s - 1)); ++i)
      add_component(pow2(n) * (1 + 2 * ExactInt(i)), n + s);
  // Around ±1: centers ±1 + 2^n(1+2i) at level n+s+1.
  for (int n = 2; n + s + 1 <= budget; ++n)
    for (long i = 0; i < (1L << s); ++i) {
      const ExactInt offset = pow2(n) * (1 + 2 * ExactInt(i));
      add_component(ExactInt(1 + offset), n + s + 1);
      add_component(reduce(offset - 1, n + s + 1).value(), n + s + 1);
    }

  const int a = budget - s + 1;
  const int b = budget - s;
  pred.pending.push_back(Ball{Residue(ExactInt(0), a)});
  pred.pending.push_back(Ball{Residue(ExactInt(1), b)});
  pred.pending.push_back(Ball{reduce(ExactInt(-1), b)});

  std::sort(pred.components.begin(), pred.components.end(),
            [](const MinimalComponent& x, const MinimalComponent& y) { return x.balls < y.balls; });
  std::sort(pred.pending.begin(), pred.pending.end());

  const auto balls = prediction_balls(pred);
  if (measure_sum(balls) != Rational(1) || !pairwise_disjoint(balls))
    throw std::logic_error("predict_decomposition: families do not tile Z_2");
  return pred;
}

namespace {

bool ball_inside_any(const Ball& b, const std::vector<Ball>& covers) {
  return std::any_of(covers.begin(), covers.end(),
                     [&](const Ball& c) { return c.contains(b); });
}

std::string describe_balls(const std::vector<Ball>& balls) {
  std::ostringstream os;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (i) os << ", ";
    os << balls[i].str();
  }
  return os.str();
}

}  // namespace

VerificationReport verify_decomposition(long m, int budget, int guard) {
  if (m < 2) throw std::invalid_argument("verify_decomposition: need m >= 2");

  VerificationReport rep;
  rep.m = m;
  rep.budget = budget;
  rep.odd_case = (m % 2 != 0);
  rep.matched = 0;
  rep.fixed_points_exact = false;
  rep.periodic_localized = false;
  rep.residual_matches = false;
  rep.recertified = false;
  rep.basin_ok = false;

  auto fail = [&rep](const std::string& msg) { rep.failures.push_back(msg); };

  const IntPolynomial T = chebyshev_recurrence(m);

  if (!rep.odd_case) {
    rep.fixed_points_exact = (T.eval(1) == 1);
    if (!rep.fixed_points_exact) fail("1 is not an exact fixed point");

    const Decomposition d = decompose(T, budget, guard);
    rep.basin_ok = true;
    if (d.basins.size() != 1 || !d.components.empty() || !d.unresolved.empty() ||
        !d.periodic_localizations.empty()) {
      rep.basin_ok = false;
      fail("expected exactly one basin and nothing else");
    } else {
      const Basin& basin = d.basins[0];
      if (measure_sum(basin.region) != Rational(1)) {
        rep.basin_ok = false;
        fail("basin region does not cover Z_2");
      }
      const std::vector<Ball> want_attr{Ball{Residue(ExactInt(1), budget)}};
      if (basin.period != 1 || basin.attractor_orbit != want_attr) {
        rep.basin_ok = false;
        fail("attractor is not the fixed point 1");
      }
      if (rep.basin_ok && !basin_oracle(T, basin.region, basin.attractor_orbit, budget, guard)) {
        rep.basin_ok = false;
        fail("attraction oracle rejected the basin");
      }
    }
    rep.pass = rep.fixed_points_exact && rep.basin_ok;
    return rep;
  }

  // Odd case.
  rep.fixed_points_exact = (T.eval(0) == 0 && T.eval(1) == 1 && T.eval(-1) == -1);
  if (!rep.fixed_points_exact) fail("0, 1, -1 are not all exact fixed points");

  const auto pred = std::get<PredictedDecomposition>(predict_decomposition(m, budget));
  const Decomposition d = decompose(T, budget, guard);

  if (!d.basins.empty()) fail("unexpected basin in the odd case");

  std::vector<Ball> want_periodic{Ball{Residue(ExactInt(0), budget)},
                                  Ball{Residue(ExactInt(1), budget)},
                                  Ball{reduce(ExactInt(-1), budget)}};
  std::sort(want_periodic.begin(), want_periodic.end());
  rep.periodic_localized = (d.periodic_localizations == want_periodic);
  if (!rep.periodic_localized)
    fail("periodic points are not localized exactly at 0, 1, -1: got " +
         describe_balls(d.periodic_localizations));

  // Component matching: engine output vs. predicted families, exact ball sets.
  std::set<std::vector<Ball>> predicted;
  for (const auto& c : pred.components) predicted.insert(c.balls);

  std::vector<const MinimalComponent*> matched_components;
  Rational tolerated_measure(0);
  for (const auto& c : d.components) {
    auto it = predicted.find(c.balls);
    if (it != predicted.end() && c.status == ComponentStatus::ProvenStrongGrowth) {
      predicted.erase(it);
      ++rep.matched;
      matched_components.push_back(&c);
    } else if (c.status == ComponentStatus::VerifiedToBudget &&
               std::all_of(c.balls.begin(), c.balls.end(), [&](const Ball& b) {
                 return ball_inside_any(b, pred.pending);
               })) {
      // A still-growing candidate inside the residual region is consistent
      // with the prediction; it is simply not yet decided.
      tolerated_measure += measure_sum(c.balls);
    } else {
      rep.extra.insert(rep.extra.end(), c.balls.begin(), c.balls.end());
    }
  }
  for (const auto& balls : predicted)
    rep.missing.insert(rep.missing.end(), balls.begin(), balls.end());
  if (!rep.missing.empty()) fail("predicted components missing: " + describe_balls(rep.missing));
  if (!rep.extra.empty()) fail("engine components outside prediction: " + describe_balls(rep.extra));

  // Residual accounting: everything the engine left open, plus its periodic
  // localizations, must fill the pending region exactly.
  bool contained = std::all_of(d.unresolved.begin(), d.unresolved.end(),
                               [&](const Ball& b) { return ball_inside_any(b, pred.pending); }) &&
                   std::all_of(d.periodic_localizations.begin(), d.periodic_localizations.end(),
                               [&](const Ball& b) { return ball_inside_any(b, pred.pending); });
  const Rational residual = measure_sum(d.unresolved) + measure_sum(d.periodic_localizations) +
                            tolerated_measure;
  rep.residual_matches = contained && residual == measure_sum(pred.pending);
  if (!rep.residual_matches) fail("unresolved region does not fill the pending balls exactly");

  rep.recertified = true;
  for (const auto* c : matched_components) {
    if (!minimality_oracle(T, c->balls, budget, guard)) {
      rep.recertified = false;
      fail("minimality oracle rejected component " + describe_balls(c->balls));
    }
  }

  rep.pass = rep.fixed_points_exact && rep.periodic_localized && d.basins.empty() &&
             rep.missing.empty() && rep.extra.empty() && rep.residual_matches && rep.recertified;
  return rep;
}

}  // namespace z2dyn
