#include <doctest.h>

#include <random>
#include <stdexcept>

#include "z2dyn/padic.hpp"

using namespace z2dyn;

namespace {

// Independent valuation oracle: repeated trial division by 2.
long v2_by_trial_division(ExactInt a) {
  REQUIRE(a != 0);
  if (a < 0) a = -a;
  long v = 0;
  while (a % 2 == 0) {
    a /= 2;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("v2 matches trial division on fixed and random inputs") {
  CHECK(v2(ExactInt(24)) == Valuation::finite(3));
  CHECK(v2(ExactInt(-20)) == Valuation::finite(2));
  CHECK(v2(ExactInt(1)) == Valuation::finite(0));
  CHECK(v2(ExactInt(0)) == Valuation::infinite());
  CHECK_FALSE(v2(ExactInt(0)).is_finite());

  std::mt19937_64 rng(20260816);
  for (int trial = 0; trial < 500; ++trial) {
    ExactInt a = ExactInt(rng()) - ExactInt(rng());
    if (a == 0) continue;
    a *= pow2(static_cast<long>(rng() % 40));  // force interesting valuations
    CHECK(v2(a) == Valuation::finite(v2_by_trial_division(a)));
  }
}

TEST_CASE("Valuation ordering treats infinity as maximal and addition absorbs it") {
  CHECK(Valuation::finite(3) < Valuation::infinite());
  CHECK(Valuation::finite(3) < Valuation::finite(5));
  CHECK(Valuation::infinite() <= Valuation::infinite());
  CHECK(Valuation::finite(2) + Valuation::finite(5) == Valuation::finite(7));
  CHECK(Valuation::finite(2) + Valuation::infinite() == Valuation::infinite());
  CHECK_THROWS_AS(Valuation::infinite().get(), std::logic_error);
}

TEST_CASE("reduce wraps into [0, 2^level)") {
  CHECK(reduce(ExactInt(26), 3) == Residue(ExactInt(2), 3));
  CHECK(reduce(ExactInt(-1), 4) == Residue(ExactInt(15), 4));
  CHECK(reduce(ExactInt(5), 5) == Residue(ExactInt(5), 5));
  CHECK_THROWS_AS(reduce(ExactInt(7), 0), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int level = 1 + static_cast<int>(rng() % 60);
    const ExactInt a = ExactInt(rng()) - ExactInt(rng());
    const Residue r = reduce(a, level);
    CHECK(r.level() == level);
    CHECK(r.value() >= 0);
    CHECK(r.value() < pow2(level));
    ExactInt diff = a - r.value();
    CHECK(diff % pow2(level) == 0);
  }
}

TEST_CASE("Residue construction is strict") {
  CHECK_THROWS_AS(Residue(ExactInt(8), 3), std::logic_error);
  CHECK_THROWS_AS(Residue(ExactInt(-1), 3), std::logic_error);
  CHECK_THROWS_AS(Residue(ExactInt(0), 0), std::logic_error);
  CHECK(Residue(ExactInt(7), 3).value() == 7);
}

TEST_CASE("Residue arithmetic is level-checked and wraps") {
  const Residue a(ExactInt(5), 3), b(ExactInt(6), 3);
  CHECK(a + b == Residue(ExactInt(3), 3));
  CHECK(a - b == Residue(ExactInt(7), 3));
  CHECK(a * b == Residue(ExactInt(6), 3));
  CHECK_THROWS_AS(a + Residue(ExactInt(1), 4), std::logic_error);
}

TEST_CASE("children splits a residue into its two refinements") {
  const auto [even, odd] = children(Residue(ExactInt(2), 3));
  CHECK(even == Residue(ExactInt(2), 4));
  CHECK(odd == Residue(ExactInt(10), 4));

  // Both children reduce back to the parent.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int level = 1 + static_cast<int>(rng() % 30);
    const Residue r = reduce(ExactInt(rng()), level);
    const auto [c0, c1] = children(r);
    CHECK(reduce(c0.value(), level) == r);
    CHECK(reduce(c1.value(), level) == r);
    CHECK(c0.level() == level + 1);
    CHECK(c1.level() == level + 1);
    CHECK(c0 != c1);
  }
}

TEST_CASE("pow2 is exact for large exponents") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(v2(pow2(200)) == Valuation::finite(200));
}
