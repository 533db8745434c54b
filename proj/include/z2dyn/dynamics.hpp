#ifndef Z2DYN_DYNAMICS_HPP
#define Z2DYN_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "z2dyn/polynomial.hpp"

namespace z2dyn {

/// Enumeration guard: cycles_at_level walks all 2^n residues, so levels above
/// this default are rejected unless the caller raises the guard explicitly.
inline constexpr int kDefaultLevelGuard = 24;

/// A cycle (x_1, ..., x_k) of the induced map on Z/2^nZ: f_n(x_i) = x_{i+1}
/// cyclically. Construction verifies closure and distinctness and rotates the
/// sequence so it starts at its minimum value.
class Cycle {
 public:
  Cycle(const IntPolynomial& f, std::vector<Residue> points);

  int level() const { return level_; }
  long length() const { return static_cast<long>(points_.size()); }
  const std::vector<Residue>& points() const { return points_; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  /// Orders by (level, length, point values) for deterministic listings.
  std::strong_ordering operator<=>(const Cycle& o) const;

  std::string str() const;

 private:
  int level_;
  std::vector<Residue> points_;
};

enum class Behavior { StronglyGrows, WeaklyGrows, StronglySplits, WeaklySplits, GrowsTails };

std::string behavior_name(Behavior b);

/// Classification of a cycle, with the witnesses behind the tag.
/// disp_mod2 is present exactly when mult_mod4 is odd (growth/split cases).
struct CycleClass {
  Behavior behavior;
  int mult_mod4;
  std::optional<int> disp_mod2;

  bool operator==(const CycleClass&) const = default;
  std::string str() const;
};

/// All cycles of f_n on Z/2^nZ, by exhaustive traversal. Every residue not on
/// a returned cycle eventually maps into one. Rejects n > guard.
std::vector<Cycle> cycles_at_level(const IntPolynomial& f, int n, int guard = kDefaultLevelGuard);

/// Cycle multiplier prod f'(f^j(x_1)) mod 4, with the orbit lifted to level
/// max(n,2)+2 so the mod-4 value is pinned down. Also asserts that the mod-2
/// value agrees across all starting points of the cycle.
int multiplier_mod4(const IntPolynomial& f, const Cycle& c);

/// Cycle displacement (f^k(x_1) - x_1)/2^n mod 2, from evaluation at level
/// n+1. Requires odd multiplier (throws logic_error otherwise).
int displacement_mod2(const IntPolynomial& f, const Cycle& c);

CycleClass classify(const IntPolynomial& f, const Cycle& c);

/// The cycles of f_{n+1} living over c's points. Their number and lengths are
/// checked against classify(f, c): grows -> one 2k-cycle, splits -> two
/// k-cycles, grows tails -> one k-cycle; a mismatch throws logic_error.
std::vector<Cycle> lifts(const IntPolynomial& f, const Cycle& c);

}  // namespace z2dyn

#endif  // Z2DYN_DYNAMICS_HPP
