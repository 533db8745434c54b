#include "z2dyn/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace z2dyn {

Rational Ball::measure() const { return Rational(1, pow2(level())); }

bool Ball::contains(const Ball& other) const {
  if (level() > other.level()) return false;
  const ExactInt m = pow2(level());
  return other.center.value() % m == center.value();
}

bool Ball::meets(const Ball& other) const { return contains(other) || other.contains(*this); }

std::string Ball::str() const {
  std::ostringstream os;
  os << center.value() << " + 2^" << level() << "*Z2";
  // Signed alias when it is the more recognizable name (e.g. -1 for 31 mod 32).
  const ExactInt signed_form = center.value() - pow2(level());
  if (signed_form >= -2 && -signed_form < center.value())
    os << " (= " << signed_form << " + 2^" << level() << "*Z2)";
  return os.str();
}

std::string status_name(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::ProvenStrongGrowth: return "proven_strong_growth";
    case ComponentStatus::VerifiedToBudget: return "verified_to_budget";
  }
  throw std::logic_error("status_name: bad enum");
}

std::vector<Ball> Decomposition::all_balls() const {
  std::vector<Ball> out = periodic_localizations;
  for (const auto& c : components) out.insert(out.end(), c.balls.begin(), c.balls.end());
  for (const auto& b : basins) out.insert(out.end(), b.region.begin(), b.region.end());
  out.insert(out.end(), unresolved.begin(), unresolved.end());
  return out;
}

Rational measure_sum(const std::vector<Ball>& balls) {
  Rational sum(0);
  for (const auto& b : balls) sum += b.measure();
  return sum;
}

bool pairwise_disjoint(const std::vector<Ball>& balls) {
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (balls[i].meets(balls[j])) return false;
  return true;
}

void validate_tiling(const Decomposition& d) {
  const auto balls = d.all_balls();
  if (measure_sum(balls) != Rational(1))
    throw std::logic_error("decomposition: ball measures do not sum to 1");
  if (!pairwise_disjoint(balls)) throw std::logic_error("decomposition: balls overlap");
}

namespace {

std::vector<Ball> balls_of(const Cycle& c) {
  std::vector<Ball> out;
  out.reserve(c.points().size());
  for (const auto& p : c.points()) out.push_back(Ball{p});
  return out;
}

// Does the cycle hold an exact integer periodic point? Candidates are the two
// integer representatives of each ball. Once an iterate y satisfies
// |y| >= S+2 (S = sum of non-leading |coefficients|) and |y| > |start|, the
// orbit's absolute value strictly doubles and can never return.
bool has_exact_periodic_point(const IntPolynomial& f, const Cycle& c) {
  const long k = c.length();
  if (k > 4096) return false;  // beyond any sensible exact search; stay sound
  ExactInt S(0);
  for (long i = 0; i < f.degree(); ++i) S += abs(f.coeff(i));
  const ExactInt escape = S + 2;
  const ExactInt modulus = pow2(c.level());

  for (const auto& p : c.points()) {
    const ExactInt reps[2] = {p.value(), ExactInt(p.value() - modulus)};
    for (const ExactInt& start : reps) {
      ExactInt y = start;
      bool escaped = false;
      for (long j = 0; j < k; ++j) {
        y = f.eval(y);
        if (abs(y) >= escape && abs(y) > abs(start)) {
          escaped = true;
          break;
        }
      }
      if (!escaped && y == start) return true;
    }
  }
  return false;
}

}  // namespace

Decomposition decompose(const IntPolynomial& f, int max_level, int guard) {
  if (f.degree() < 2) throw std::invalid_argument("decompose: degree must be >= 2");
  if (max_level < 2) throw std::invalid_argument("decompose: max_level must be >= 2");
  if (max_level > guard || guard > 63)
    throw BudgetError("decompose: max_level " + std::to_string(max_level) + " exceeds guard " +
                      std::to_string(std::min(guard, 63)));

  Decomposition out;
  out.max_level = max_level;

  const std::vector<Cycle> roots = cycles_at_level(f, 1);

  // Route the level-1 residues that sit off every cycle: such a ball maps
  // into some root cycle's region after at most one step. It joins that
  // cycle's basin if the cycle grows tails, and stays unsettled otherwise.
  std::vector<std::vector<Ball>> extra_region(roots.size());
  {
    std::set<ExactInt> on_cycle;
    for (const auto& r : roots)
      for (const auto& p : r.points()) on_cycle.insert(p.value());
    for (int v = 0; v < 2; ++v) {
      if (on_cycle.count(v)) continue;
      ExactInt x(v);
      while (!on_cycle.count(x)) x = f.eval_mod(Residue(x, 1)).value();
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto& pts = roots[i].points();
        if (std::find_if(pts.begin(), pts.end(),
                         [&](const Residue& p) { return p.value() == x; }) != pts.end()) {
          extra_region[i].push_back(Ball{Residue(ExactInt(v), 1)});
          break;
        }
      }
    }
  }

  struct Item {
    Cycle cycle;
    std::vector<Ball> extra;  // level-1 stray balls routed to this cycle
  };
  std::deque<Item> queue;
  for (std::size_t i = 0; i < roots.size(); ++i)
    queue.push_back({roots[i], std::move(extra_region[i])});

  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    const Cycle& c = item.cycle;
    const int n = c.level();
    const long k = c.length();
    const CycleClass cls = classify(f, c);

    if (cls.behavior == Behavior::GrowsTails) {
      // The whole region is attracted to a k-periodic orbit inside it.
      // Follow the single-lift chain (tails persist) to localize that orbit.
      Basin basin;
      basin.region = balls_of(c);
      basin.region.insert(basin.region.end(), item.extra.begin(), item.extra.end());
      std::sort(basin.region.begin(), basin.region.end());
      Cycle cur = c;
      while (cur.level() < max_level) {
        auto ls = lifts(f, cur);
        if (ls.size() != 1 || ls[0].length() != k)
          throw std::logic_error("decompose: tails chain did not persist");
        cur = std::move(ls[0]);
      }
      basin.attractor_orbit = balls_of(cur);
      basin.period = k;
      out.basins.push_back(std::move(basin));
      continue;
    }

    // Stray level-1 balls feeding a non-tails cycle: their limit structure
    // lives inside a region this budgeted pass cannot attribute them to.
    for (auto& b : item.extra) out.unresolved.push_back(std::move(b));

    if (n >= 2 && cls.behavior == Behavior::StronglyGrows) {
      auto balls = balls_of(c);
      std::sort(balls.begin(), balls.end());
      out.components.push_back({std::move(balls), k, ComponentStatus::ProvenStrongGrowth});
      continue;
    }

    if (n == max_level) {
      auto balls = balls_of(c);
      std::sort(balls.begin(), balls.end());
      if (cls.behavior == Behavior::WeaklyGrows) {
        // Still one growing cycle at the budget: report it as a candidate
        // component, verified only as far as we looked.
        out.components.push_back({std::move(balls), k, ComponentStatus::VerifiedToBudget});
      } else if (has_exact_periodic_point(f, c)) {
        // A splitting chain pinned on an exact periodic orbit: these balls
        // localize honest periodic points.
        for (auto& b : balls) out.periodic_localizations.push_back(std::move(b));
      } else {
        for (auto& b : balls) out.unresolved.push_back(std::move(b));
      }
      continue;
    }

    for (auto& l : lifts(f, c)) queue.push_back({std::move(l), {}});
  }

  std::sort(out.periodic_localizations.begin(), out.periodic_localizations.end());
  std::sort(out.unresolved.begin(), out.unresolved.end());
  std::sort(out.components.begin(), out.components.end(),
            [](const MinimalComponent& a, const MinimalComponent& b) { return a.balls < b.balls; });
  std::sort(out.basins.begin(), out.basins.end(),
            [](const Basin& a, const Basin& b) { return a.region < b.region; });

  validate_tiling(out);
  return out;
}

bool minimality_oracle(const IntPolynomial& f, const std::vector<Ball>& E, int check_level,
                       int guard) {
  if (E.empty()) throw std::invalid_argument("minimality_oracle: empty ball set");
  const int L = E[0].level();
  for (const auto& b : E)
    if (b.level() != L) throw std::invalid_argument("minimality_oracle: mixed ball levels");
  if (check_level < L)
    throw std::invalid_argument("minimality_oracle: check_level below ball level");
  if (check_level > guard || guard > 63)
    throw BudgetError("minimality_oracle: check_level " + std::to_string(check_level) +
                      " exceeds guard " + std::to_string(std::min(guard, 63)));

  std::unordered_set<std::uint64_t> centers;
  for (const auto& b : E) centers.insert(static_cast<std::uint64_t>(b.center.value()));
  if (centers.size() != E.size())
    throw std::invalid_argument("minimality_oracle: repeated ball");
  const std::uint64_t maskL = (std::uint64_t{1} << L) - 1;
  const std::uint64_t x0 = *std::min_element(centers.begin(), centers.end());

  for (int n = L; n <= check_level; ++n) {
    // Must be one cycle through all |E|·2^{n-L} residues over E: walk from
    // x0 and demand the first return close exactly there.
    const std::uint64_t total = static_cast<std::uint64_t>(E.size()) << (n - L);
    ReducedPoly g(f, n);
    std::uint64_t x = x0;
    std::uint64_t t = 0;
    while (t < total) {
      x = g(x);
      ++t;
      if (!centers.count(x & maskL)) return false;  // leaves E: not invariant
      if (x == x0) break;
    }
    if (x != x0 || t != total) return false;
  }
  return true;
}

bool basin_oracle(const IntPolynomial& f, const std::vector<Ball>& region,
                  const std::vector<Ball>& attractor, int level, int guard) {
  if (region.empty() || attractor.empty())
    throw std::invalid_argument("basin_oracle: empty region or attractor");
  if (level < 1) throw std::invalid_argument("basin_oracle: level must be >= 1");
  if (level > guard || guard > 63)
    throw BudgetError("basin_oracle: level " + std::to_string(level) + " exceeds guard " +
                      std::to_string(std::min(guard, 63)));
  for (const auto& b : region)
    if (b.level() > level) throw std::invalid_argument("basin_oracle: region finer than level");
  for (const auto& a : attractor) {
    if (a.level() > level)
      throw std::invalid_argument("basin_oracle: attractor finer than level");
    if (std::none_of(region.begin(), region.end(),
                     [&](const Ball& r) { return r.contains(a); }))
      throw std::invalid_argument("basin_oracle: attractor not inside region");
  }

  const std::uint64_t N = std::uint64_t{1} << level;
  ReducedPoly g(f, level);

  // Verdicts per residue: 0 unknown, 1 reaches the attractor, 2 never does,
  // 3 on the walk currently being resolved.
  std::vector<std::uint8_t> verdict(N, 0);
  for (const auto& a : attractor) {
    const std::uint64_t base = static_cast<std::uint64_t>(a.center.value());
    const std::uint64_t stride = std::uint64_t{1} << a.level();
    for (std::uint64_t x = base; x < N; x += stride) verdict[x] = 1;
  }
  // Absorption: the attractor's residue set must be forward-invariant, else
  // "enters and stays" fails and the orbit localization is meaningless.
  for (std::uint64_t x = 0; x < N; ++x)
    if (verdict[x] == 1 && verdict[g(x)] != 1) return false;

  std::vector<std::uint64_t> path;
  auto resolve = [&](std::uint64_t start) {
    std::uint64_t x = start;
    path.clear();
    while (verdict[x] == 0) {
      verdict[x] = 3;
      path.push_back(x);
      x = g(x);
    }
    // Hitting an in-flight node means the walk closed a loop that never
    // touched the attractor.
    const std::uint8_t outcome = (verdict[x] == 1) ? 1 : 2;
    for (auto y : path) verdict[y] = outcome;
    return outcome;
  };

  for (const auto& r : region) {
    const std::uint64_t base = static_cast<std::uint64_t>(r.center.value());
    const std::uint64_t stride = std::uint64_t{1} << r.level();
    for (std::uint64_t x = base; x < N; x += stride)
      if (resolve(x) != 1) return false;
  }
  return true;
}

}  // namespace z2dyn
