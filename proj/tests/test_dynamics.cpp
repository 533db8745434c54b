#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "z2dyn/chebyshev.hpp"
#include "z2dyn/dynamics.hpp"

using namespace z2dyn;

namespace {

IntPolynomial poly(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<ExactInt> c;
  for (long v : coeffs_low_to_high) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

Cycle cyc(const IntPolynomial& f, std::initializer_list<long> values, int level) {
  std::vector<Residue> pts;
  for (long v : values) pts.emplace_back(ExactInt(v), level);
  return Cycle(f, std::move(pts));
}

// Independent oracle: after 2^n iterations every residue has entered a cycle,
// so the image of the whole space under f^(2^n) is exactly the cyclic part.
std::set<std::uint64_t> cyclic_part_oracle(const IntPolynomial& f, int n) {
  const ReducedPoly g(f, n);
  const std::uint64_t N = std::uint64_t{1} << n;
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 0; x < N; ++x) {
    std::uint64_t y = x;
    for (std::uint64_t i = 0; i < N; ++i) y = g(y);
    out.insert(y);
  }
  return out;
}

const IntPolynomial kT2 = chebyshev_recurrence(2);
const IntPolynomial kT3 = chebyshev_recurrence(3);

}  // namespace

TEST_CASE("Cycle construction validates and canonicalizes") {
  const Cycle c = cyc(kT3, {10, 2}, 4);  // valid orbit order, rotated to min
  CHECK(c.points()[0] == Residue(ExactInt(2), 4));
  CHECK(c.points()[1] == Residue(ExactInt(10), 4));
  CHECK(c.length() == 2);
  CHECK(c.level() == 4);

  CHECK_THROWS_AS(cyc(kT3, {2, 11}, 4), std::invalid_argument);  // not closed
  CHECK_THROWS_AS(cyc(poly({0, 1}), {2, 2}, 4), std::invalid_argument);  // repeated
  CHECK_THROWS_AS(Cycle(kT3, {}), std::invalid_argument);  // empty
  CHECK_THROWS_AS(Cycle(kT3, {Residue(ExactInt(0), 1), Residue(ExactInt(0), 2)}),
                  std::invalid_argument);  // mixed levels
}

TEST_CASE("cycles_at_level: frozen small cases") {
  const auto t3_level1 = cycles_at_level(kT3, 1);
  REQUIRE(t3_level1.size() == 2);
  CHECK(t3_level1[0] == cyc(kT3, {0}, 1));
  CHECK(t3_level1[1] == cyc(kT3, {1}, 1));

  // 4x^3 - 3x fixes everything mod 8: eight singleton cycles.
  const auto t3_level3 = cycles_at_level(kT3, 3);
  REQUIRE(t3_level3.size() == 8);
  for (long v = 0; v < 8; ++v) CHECK(t3_level3[static_cast<std::size_t>(v)] == cyc(kT3, {v}, 3));

  const auto t2_level1 = cycles_at_level(kT2, 1);
  REQUIRE(t2_level1.size() == 1);
  CHECK(t2_level1[0] == cyc(kT2, {1}, 1));

  const auto sq_plus_x = cycles_at_level(poly({0, 1, 1}), 1);
  REQUIRE(sq_plus_x.size() == 1);
  CHECK(sq_plus_x[0] == cyc(poly({0, 1, 1}), {0}, 1));
}

TEST_CASE("cycles_at_level matches the iterate-to-absorption oracle") {
  std::mt19937_64 rng(271828);
  std::vector<IntPolynomial> samples = {kT2, kT3, poly({0, 1, 1}), poly({1, 0, 1}),
                                        poly({2, 0, 0, 1}), poly({8, -3, 0, 4})};
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<ExactInt> c;
    for (int k = 0; k <= 3; ++k) c.emplace_back(static_cast<long>(rng() % 17) - 8);
    if (IntPolynomial(c).degree() >= 1) samples.emplace_back(std::move(c));
  }
  for (const auto& f : samples) {
    for (int n = 1; n <= 8; ++n) {
      std::set<std::uint64_t> got;
      for (const auto& cycle : cycles_at_level(f, n))
        for (const auto& p : cycle.points()) {
          const bool fresh = got.insert(static_cast<std::uint64_t>(p.value())).second;
          CHECK(fresh);  // cycles are pairwise disjoint
        }
      CHECK(got == cyclic_part_oracle(f, n));
    }
  }
}

TEST_CASE("cycles_at_level respects the enumeration guard") {
  CHECK_THROWS_AS(cycles_at_level(kT3, kDefaultLevelGuard + 1), BudgetError);
  CHECK_THROWS_AS(cycles_at_level(kT3, 5, 4), BudgetError);
  CHECK_THROWS_AS(cycles_at_level(kT3, 64, 64), BudgetError);  // hard cap at 63
  CHECK_THROWS_AS(cycles_at_level(kT3, 0), std::invalid_argument);
  CHECK_NOTHROW(cycles_at_level(kT3, 10, 63));
}

TEST_CASE("multiplier_mod4: frozen witnesses") {
  CHECK(multiplier_mod4(kT3, cyc(kT3, {1}, 2)) == 1);
  CHECK(multiplier_mod4(kT2, cyc(kT2, {1}, 1)) == 0);
  CHECK(multiplier_mod4(poly({0, 1, 2}), cyc(poly({0, 1, 2}), {0}, 1)) == 1);
  CHECK(multiplier_mod4(poly({2, 0, 0, 1}), cyc(poly({2, 0, 0, 1}), {1}, 1)) == 3);
  // Two-point cycle: product over the orbit. x^3 + 2 on (1,3) mod 4:
  // 3·(3·9) = 81 ≡ 1 (mod 4).
  CHECK(multiplier_mod4(poly({2, 0, 0, 1}), cyc(poly({2, 0, 0, 1}), {1, 3}, 2)) == 1);
}

TEST_CASE("displacement_mod2: frozen witnesses and the even-multiplier guard") {
  CHECK(displacement_mod2(kT3, cyc(kT3, {0}, 1)) == 0);
  CHECK(displacement_mod2(kT3, cyc(kT3, {2}, 3)) == 1);  // (26-2)/8 = 3
  CHECK(displacement_mod2(kT3, cyc(kT3, {5}, 3)) == 0);  // (485-5)/8 = 60
  CHECK_THROWS_AS(displacement_mod2(kT2, cyc(kT2, {1}, 1)), std::logic_error);
}

TEST_CASE("classify covers all five behaviors") {
  CHECK(classify(kT3, cyc(kT3, {2}, 3)) == CycleClass{Behavior::StronglyGrows, 1, 1});
  CHECK(classify(kT3, cyc(kT3, {0}, 1)) == CycleClass{Behavior::StronglySplits, 1, 0});
  CHECK(classify(kT2, cyc(kT2, {1}, 1)) == CycleClass{Behavior::GrowsTails, 0, std::nullopt});

  const IntPolynomial cube_plus_2 = poly({2, 0, 0, 1});
  CHECK(classify(cube_plus_2, cyc(cube_plus_2, {1}, 1)) ==
        CycleClass{Behavior::WeaklyGrows, 3, 1});

  const IntPolynomial cube = poly({0, 0, 0, 1});
  CHECK(classify(cube, cyc(cube, {1}, 2)) == CycleClass{Behavior::WeaklySplits, 3, 0});
}

TEST_CASE("lifts: growth doubles, splitting forks, tails persist") {
  // Strong growth: one cycle of doubled length.
  const auto grown = lifts(kT3, cyc(kT3, {2}, 3));
  REQUIRE(grown.size() == 1);
  CHECK(grown[0] == cyc(kT3, {2, 10}, 4));

  // Splitting: two cycles of the same length.
  const auto split = lifts(kT3, cyc(kT3, {0}, 1));
  REQUIRE(split.size() == 2);
  CHECK(split[0] == cyc(kT3, {0}, 2));
  CHECK(split[1] == cyc(kT3, {2}, 2));

  // Tails: a single cycle of the same length.
  const auto tails = lifts(kT2, cyc(kT2, {1}, 1));
  REQUIRE(tails.size() == 1);
  CHECK(tails[0] == cyc(kT2, {1}, 2));

  // Weak growth doubles into strong growth (multiplier squares to 1 mod 4).
  const IntPolynomial cube_plus_2 = poly({2, 0, 0, 1});
  const auto weak_lift = lifts(cube_plus_2, cyc(cube_plus_2, {1}, 1));
  REQUIRE(weak_lift.size() == 1);
  CHECK(weak_lift[0] == cyc(cube_plus_2, {1, 3}, 2));
  CHECK(classify(cube_plus_2, weak_lift[0]).behavior == Behavior::StronglyGrows);
}

TEST_CASE("lift points are exactly the children of the cycle's points") {
  std::vector<IntPolynomial> samples = {kT2, kT3, poly({0, 1, 1}), poly({1, 0, 1}),
                                        poly({2, 0, 0, 1}), poly({8, -3, 0, 4})};
  for (const auto& f : samples) {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& c : cycles_at_level(f, n)) {
        std::set<Residue> expected;
        for (const auto& p : c.points()) {
          const auto [c0, c1] = children(p);
          expected.insert(c0);
          expected.insert(c1);
        }
        std::set<Residue> got;
        long total = 0;
        for (const auto& lift : lifts(f, c)) {  // throws if count/length law fails
          total += lift.length();
          for (const auto& p : lift.points()) got.insert(p);
        }
        // Tails keep k of the 2k children periodic (the rest become transient);
        // growth and splitting keep all 2k.
        const bool is_tails = classify(f, c).behavior == Behavior::GrowsTails;
        CHECK(total == (is_tails ? c.length() : 2 * c.length()));
        CHECK(static_cast<long>(got.size()) == total);
        for (const auto& p : got) CHECK(expected.count(p) == 1);
      }
    }
  }
}
