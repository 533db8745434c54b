#include "z2dyn/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace z2dyn {

IntPolynomial::IntPolynomial(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::monomial(ExactInt c, long degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<ExactInt> v(static_cast<std::size_t>(degree) + 1, ExactInt(0));
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const ExactInt& IntPolynomial::coeff(long k) const {
  static const ExactInt zero(0);
  if (k < 0) throw std::invalid_argument("coeff: negative index");
  if (k > degree()) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

ExactInt IntPolynomial::eval(const ExactInt& x) const {
  ExactInt acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Residue IntPolynomial::eval_mod(const Residue& x) const {
  const ExactInt m = pow2(x.level());
  ExactInt acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x.value() + coeffs_[i];
    acc %= m;
    if (acc < 0) acc += m;
  }
  return Residue(acc, x.level());
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return IntPolynomial{};
  std::vector<ExactInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = ExactInt(k) * coeffs_[k];
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& g) const {
  // Horner in the outer polynomial: result = (...(c_d * g + c_{d-1}) * g + ...)
  IntPolynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * g + IntPolynomial({coeffs_[i]});
  }
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<ExactInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<ExactInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial{};
  std::vector<ExactInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, ExactInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const ExactInt& c, const IntPolynomial& f) {
  std::vector<ExactInt> v(f.coeffs_);
  for (auto& e : v) e *= c;
  return IntPolynomial(std::move(v));
}

ReducedPoly::ReducedPoly(const IntPolynomial& f, int level) : level_(level) {
  if (level < 1 || level > 64) throw std::invalid_argument("ReducedPoly: level must be in [1,64]");
  mask_ = (level == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << level) - 1);
  const ExactInt m = pow2(level);
  coeffs_.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    ExactInt r = c % m;
    if (r < 0) r += m;
    coeffs_.push_back(static_cast<std::uint64_t>(r));
  }
}

}  // namespace z2dyn
