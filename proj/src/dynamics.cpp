#include "z2dyn/dynamics.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace z2dyn {

namespace {

// f(v) mod 2^L for arbitrary L, on plain integer values.
ExactInt step(const IntPolynomial& f, const ExactInt& v, int L) {
  return f.eval_mod(reduce(v, L)).value();
}

}  // namespace

Cycle::Cycle(const IntPolynomial& f, std::vector<Residue> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("Cycle: empty point sequence");
  level_ = points_[0].level();
  for (const auto& p : points_)
    if (p.level() != level_) throw std::invalid_argument("Cycle: mixed levels");

  const std::size_t k = points_.size();
  if (level_ <= 64) {
    ReducedPoly g(f, level_);
    for (std::size_t i = 0; i < k; ++i) {
      const auto got = g(static_cast<std::uint64_t>(points_[i].value()));
      if (got != static_cast<std::uint64_t>(points_[(i + 1) % k].value()))
        throw std::invalid_argument("Cycle: sequence is not closed under f");
    }
  } else {
    for (std::size_t i = 0; i < k; ++i)
      if (f.eval_mod(points_[i]) != points_[(i + 1) % k])
        throw std::invalid_argument("Cycle: sequence is not closed under f");
  }

  std::vector<Residue> sorted(points_.begin(), points_.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("Cycle: repeated point");

  const auto min_it = std::min_element(points_.begin(), points_.end());
  std::rotate(points_.begin(), min_it, points_.end());
}

std::strong_ordering Cycle::operator<=>(const Cycle& o) const {
  if (auto c = level_ <=> o.level_; c != 0) return c;
  if (auto c = points_.size() <=> o.points_.size(); c != 0) return c;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (auto c = points_[i] <=> o.points_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Cycle::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) os << ", ";
    os << points_[i].value();
  }
  os << ") at level " << level_;
  return os.str();
}

std::string behavior_name(Behavior b) {
  switch (b) {
    case Behavior::StronglyGrows: return "StronglyGrows";
    case Behavior::WeaklyGrows: return "WeaklyGrows";
    case Behavior::StronglySplits: return "StronglySplits";
    case Behavior::WeaklySplits: return "WeaklySplits";
    case Behavior::GrowsTails: return "GrowsTails";
  }
  throw std::logic_error("behavior_name: bad enum");
}

std::string CycleClass::str() const {
  std::ostringstream os;
  os << behavior_name(behavior) << " (mult=" << mult_mod4 << " mod 4";
  if (disp_mod2) os << ", disp=" << *disp_mod2 << " mod 2";
  os << ")";
  return os.str();
}

std::vector<Cycle> cycles_at_level(const IntPolynomial& f, int n, int guard) {
  if (n < 1) throw std::invalid_argument("cycles_at_level: level must be >= 1");
  if (n > guard || guard > 63)
    throw BudgetError("cycles_at_level: level " + std::to_string(n) + " exceeds guard " +
                      std::to_string(std::min(guard, 63)));

  const std::uint64_t N = std::uint64_t{1} << n;
  ReducedPoly g(f, n);
  // 0 = unvisited, 1 = on the current path, 2 = settled.
  std::vector<std::uint8_t> color(N, 0);
  std::vector<std::uint64_t> path;
  std::vector<std::vector<std::uint64_t>> raw;

  for (std::uint64_t s = 0; s < N; ++s) {
    if (color[s] != 0) continue;
    path.clear();
    std::uint64_t x = s;
    while (color[x] == 0) {
      color[x] = 1;
      path.push_back(x);
      x = g(x);
    }
    if (color[x] == 1) {
      // x closes a new cycle: it sits somewhere on the current path.
      std::size_t i = path.size();
      while (path[--i] != x) {}
      raw.emplace_back(path.begin() + static_cast<std::ptrdiff_t>(i), path.end());
    }
    for (auto y : path) color[y] = 2;
  }

  std::vector<Cycle> out;
  out.reserve(raw.size());
  for (auto& values : raw) {
    std::vector<Residue> pts;
    pts.reserve(values.size());
    for (auto v : values) pts.emplace_back(ExactInt(v), n);
    out.emplace_back(f, std::move(pts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// The four level-1 constants driving the orbit's mod-2 shadow: f and f' at
// the residues 0 and 1. f'(y) mod 2 depends only on y mod 2.
struct Mod2Shadow {
  int f0, f1, fp0, fp1;

  explicit Mod2Shadow(const IntPolynomial& f) {
    const IntPolynomial fp = f.derivative();
    f0 = static_cast<int>(f.eval(0) & 1);
    f1 = static_cast<int>(f.eval(1) & 1);
    fp0 = static_cast<int>(fp.eval(0) & 1);
    fp1 = static_cast<int>(fp.eval(1) & 1);
  }

  // Multiplier parity for the orbit started at the given cycle point.
  int multiplier_parity(const Cycle& c, std::size_t start) const {
    int y = static_cast<int>(c.points()[start].value() & 1);
    int prod = 1;
    for (long j = 0; j < c.length(); ++j) {
      prod &= (y == 0 ? fp0 : fp1);
      y = (y == 0 ? f0 : f1);
    }
    return prod;
  }
};

}  // namespace

int multiplier_mod4(const IntPolynomial& f, const Cycle& c) {
  const int n = c.level();
  const int L = std::max(n, 2) + 2;
  const IntPolynomial fp = f.derivative();
  const ExactInt four(4);

  ExactInt y = c.points()[0].value();
  ExactInt prod(1);
  for (long j = 0; j < c.length(); ++j) {
    ExactInt d = fp.eval_mod(reduce(y, 2)).value();
    prod = (prod * d) % four;
    y = step(f, y, L);
  }
  const int a4 = static_cast<int>(prod);

  const Mod2Shadow shadow(f);
  const int a2 = shadow.multiplier_parity(c, 0);
  if (a2 != a4 % 2) throw std::logic_error("multiplier_mod4: parity disagrees with level-1 shadow");
  for (std::size_t i = 1; i < c.points().size(); ++i)
    if (shadow.multiplier_parity(c, i) != a2)
      throw std::logic_error("multiplier_mod4: multiplier parity not constant along the cycle");

  return a4;
}

int displacement_mod2(const IntPolynomial& f, const Cycle& c) {
  if (Mod2Shadow(f).multiplier_parity(c, 0) == 0)
    throw std::logic_error("displacement_mod2: displacement undefined for even multiplier");
  const int n = c.level();
  ExactInt y = c.points()[0].value();
  for (long j = 0; j < c.length(); ++j) y = step(f, y, n + 1);
  ExactInt diff = y - c.points()[0].value();
  const ExactInt twoN1 = pow2(n + 1);
  diff %= twoN1;
  if (diff < 0) diff += twoN1;
  if (diff != 0 && diff != pow2(n))
    throw std::logic_error("displacement_mod2: f^k does not fix the point at its own level");
  return diff == 0 ? 0 : 1;
}

CycleClass classify(const IntPolynomial& f, const Cycle& c) {
  const int a4 = multiplier_mod4(f, c);
  if (a4 % 2 == 0) return CycleClass{Behavior::GrowsTails, a4, std::nullopt};
  const int b2 = displacement_mod2(f, c);
  const bool strong = (a4 == 1);
  Behavior tag = (b2 == 1) ? (strong ? Behavior::StronglyGrows : Behavior::WeaklyGrows)
                           : (strong ? Behavior::StronglySplits : Behavior::WeaklySplits);
  return CycleClass{tag, a4, b2};
}

std::vector<Cycle> lifts(const IntPolynomial& f, const Cycle& c) {
  const int n = c.level();
  const long k = c.length();

  // The 2k children of c's points form a set closed under f_{n+1}.
  std::vector<ExactInt> nodes;
  nodes.reserve(2 * static_cast<std::size_t>(k));
  for (const auto& p : c.points()) {
    nodes.push_back(p.value());
    nodes.push_back(p.value() + pow2(n));
  }
  std::map<ExactInt, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;

  std::vector<std::size_t> next(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ExactInt img = step(f, nodes[i], n + 1);
    auto it = index.find(img);
    if (it == index.end()) throw std::logic_error("lifts: image escapes the fiber");
    next[i] = it->second;
  }

  std::vector<std::uint8_t> color(nodes.size(), 0);
  std::vector<std::size_t> path;
  std::vector<Cycle> out;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (color[s] != 0) continue;
    path.clear();
    std::size_t x = s;
    while (color[x] == 0) {
      color[x] = 1;
      path.push_back(x);
      x = next[x];
    }
    if (color[x] == 1) {
      std::size_t i = path.size();
      while (path[--i] != x) {}
      std::vector<Residue> pts;
      for (std::size_t j = i; j < path.size(); ++j) pts.emplace_back(nodes[path[j]], n + 1);
      out.emplace_back(f, std::move(pts));
    }
    for (auto y : path) color[y] = 2;
  }
  std::sort(out.begin(), out.end());

  const CycleClass cls = classify(f, c);
  bool ok = false;
  switch (cls.behavior) {
    case Behavior::StronglyGrows:
    case Behavior::WeaklyGrows:
      ok = out.size() == 1 && out[0].length() == 2 * k;
      break;
    case Behavior::StronglySplits:
    case Behavior::WeaklySplits:
      ok = out.size() == 2 && out[0].length() == k && out[1].length() == k;
      break;
    case Behavior::GrowsTails:
      ok = out.size() == 1 && out[0].length() == k;
      break;
  }
  if (!ok)
    throw std::logic_error("lifts: observed lift structure contradicts classification " +
                           cls.str() + " for cycle " + c.str());
  return out;
}

}  // namespace z2dyn
