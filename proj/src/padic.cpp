#include "z2dyn/padic.hpp"

namespace z2dyn {

ExactInt pow2(long k) {
  if (k < 0) throw std::invalid_argument("pow2: negative exponent");
  return ExactInt(1) << k;
}

Valuation Valuation::finite(long k) {
  if (k < 0) throw std::invalid_argument("Valuation: negative exponent");
  return Valuation(true, k);
}

Valuation Valuation::infinite() { return Valuation(false, 0); }

long Valuation::get() const {
  if (!finite_) throw std::logic_error("Valuation::get on infinite valuation");
  return value_;
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (!a.finite_) return false;          // infinite is maximal
  if (!b.finite_) return true;
  return a.value_ < b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (!a.finite_ || !b.finite_) return Valuation::infinite();
  return Valuation::finite(a.value_ + b.value_);
}

std::string Valuation::str() const {
  return finite_ ? std::to_string(value_) : "inf";
}

Valuation v2(const ExactInt& a) {
  if (a == 0) return Valuation::infinite();
  ExactInt m = abs(a);
  return Valuation::finite(static_cast<long>(boost::multiprecision::lsb(m)));
}

Residue::Residue(ExactInt value, int level) : value_(std::move(value)), level_(level) {
  if (level_ < 1) throw std::logic_error("Residue: level must be >= 1");
  if (value_ < 0 || value_ >= pow2(level_))
    throw std::logic_error("Residue: value out of range for level; use reduce()");
}

std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
  if (a.level_ != b.level_) return a.level_ <=> b.level_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {
void require_same_level(const Residue& a, const Residue& b, const char* op) {
  if (a.level() != b.level())
    throw std::logic_error(std::string("Residue: mixed-level ") + op + " (" +
                           std::to_string(a.level()) + " vs " + std::to_string(b.level()) + ")");
}
}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_level(a, b, "addition");
  return reduce(a.value_ + b.value_, a.level_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_level(a, b, "subtraction");
  return reduce(a.value_ - b.value_, a.level_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_level(a, b, "multiplication");
  return reduce(a.value_ * b.value_, a.level_);
}

std::string Residue::str() const {
  return value_.str() + " mod 2^" + std::to_string(level_);
}

Residue reduce(const ExactInt& a, int level) {
  if (level < 1) throw std::invalid_argument("reduce: level must be >= 1");
  ExactInt m = pow2(level);
  ExactInt r = a % m;
  if (r < 0) r += m;
  return Residue(std::move(r), level);
}

std::pair<Residue, Residue> children(const Residue& r) {
  return {Residue(r.value(), r.level() + 1),
          Residue(r.value() + pow2(r.level()), r.level() + 1)};
}

}  // namespace z2dyn
