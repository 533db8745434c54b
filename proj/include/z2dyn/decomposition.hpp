#ifndef Z2DYN_DECOMPOSITION_HPP
#define Z2DYN_DECOMPOSITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "z2dyn/dynamics.hpp"
#include "z2dyn/polynomial.hpp"

namespace z2dyn {

/// The clopen set center + 2^L Z_2, where L is the center's level.
/// Measure 2^{-L}; equality is (level, center value) equality.
struct Ball {
  Residue center;

  int level() const { return center.level(); }
  Rational measure() const;
  /// True iff the two balls share a 2-adic point (one contains the other).
  bool meets(const Ball& other) const;
  bool contains(const Ball& other) const;

  friend bool operator==(const Ball&, const Ball&) = default;
  std::strong_ordering operator<=>(const Ball& o) const { return center <=> o.center; }

  std::string str() const;
};

enum class ComponentStatus {
  ProvenStrongGrowth,  // certified minimal: strong growth at level >= 2
  VerifiedToBudget,    // still a growing single cycle at the budget; candidate only
};

std::string status_name(ComponentStatus s);

/// A finite union of balls (all at one level) on which f is minimal —
/// proven, or verified as far as the budget allowed.
struct MinimalComponent {
  std::vector<Ball> balls;  // sorted; |balls| = cycle_length
  long cycle_length;
  ComponentStatus status;

  bool operator==(const MinimalComponent&) const = default;
};

/// An attracting basin: every point of region converges to the periodic
/// orbit localized by attractor_orbit (balls at the budget level).
struct Basin {
  std::vector<Ball> region;           // sorted
  std::vector<Ball> attractor_orbit;  // in orbit order, rotated to min
  long period;

  bool operator==(const Basin&) const = default;
};

/// Partition of Z_2 to a precision budget: balls holding the located periodic
/// points, minimal components, attracting basins, and the branches the budget
/// could not settle. The four parts tile Z_2 exactly.
struct Decomposition {
  int max_level;
  std::vector<Ball> periodic_localizations;
  std::vector<MinimalComponent> components;
  std::vector<Basin> basins;
  std::vector<Ball> unresolved;

  /// Every ball the partition owns: periodic localizations, component balls,
  /// basin regions (attractor balls live inside the region and are not
  /// counted), unresolved.
  std::vector<Ball> all_balls() const;
};

/// Exact total measure of a set of balls.
Rational measure_sum(const std::vector<Ball>& balls);

/// True iff no two balls share a point.
bool pairwise_disjoint(const std::vector<Ball>& balls);

/// Throws logic_error unless the decomposition's balls tile Z_2 exactly
/// (measure sum 1, pairwise disjoint).
void validate_tiling(const Decomposition& d);

/// Minimal decomposition of f on Z_2, explored to max_level. Requires
/// deg f >= 2 and 2 <= max_level <= guard.
Decomposition decompose(const IntPolynomial& f, int max_level, int guard = kDefaultLevelGuard);

/// Brute-force minimality certificate: true iff for every n in
/// [level of E, check_level] the induced map on the level-n residues meeting
/// E is one cycle covering all of them. All balls of E must share one level.
bool minimality_oracle(const IntPolynomial& f, const std::vector<Ball>& E, int check_level,
                       int guard = kDefaultLevelGuard);

/// Brute-force attraction certificate: true iff the attractor's level-`level`
/// residue set is forward-invariant under f and every level-`level` residue
/// of the region reaches it under iteration. Requires attractor ⊆ region.
bool basin_oracle(const IntPolynomial& f, const std::vector<Ball>& region,
                  const std::vector<Ball>& attractor, int level, int guard = kDefaultLevelGuard);

}  // namespace z2dyn

#endif  // Z2DYN_DECOMPOSITION_HPP
