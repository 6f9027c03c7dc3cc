#include "hemicert/radial_poly.hpp"

#include <stdexcept>

namespace hemicert {

RadialPoly::RadialPoly(Parity p, std::vector<Rational> coeffs)
    : parity_(p), coef_(std::move(coeffs)) {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

bool RadialPoly::is_zero() const { return coef_.empty(); }

int RadialPoly::degree() const {
  if (coef_.empty()) return -1;
  int i = static_cast<int>(coef_.size()) - 1;
  return 2 * i + (parity_ == Parity::Odd ? 1 : 0);
}

RadialPoly RadialPoly::derivative() const {
  std::vector<Rational> out;
  if (parity_ == Parity::Even) {
    // d/dr c_i r^(2i) = 2i c_i r^(2i-1): odd coefficients, index i-1
    for (std::size_t i = 1; i < coef_.size(); ++i)
      out.push_back(Rational(2 * static_cast<long>(i)) * coef_[i]);
    return RadialPoly(Parity::Odd, std::move(out));
  }
  // d/dr c_i r^(2i+1) = (2i+1) c_i r^(2i)
  for (std::size_t i = 0; i < coef_.size(); ++i)
    out.push_back(Rational(2 * static_cast<long>(i) + 1) * coef_[i]);
  return RadialPoly(Parity::Even, std::move(out));
}

RadialPoly RadialPoly::operator-() const {
  RadialPoly p = *this;
  for (auto& c : p.coef_) c = -c;
  return p;
}

RadialPoly operator+(const RadialPoly& a, const RadialPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.parity_ != b.parity_)
    throw std::invalid_argument("RadialPoly: parity mismatch in addition");
  std::vector<Rational> out(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) out[i] += a.coef_[i];
  for (std::size_t i = 0; i < b.coef_.size(); ++i) out[i] += b.coef_[i];
  return RadialPoly(a.parity_, std::move(out));
}

RadialPoly operator-(const RadialPoly& a, const RadialPoly& b) { return a + (-b); }

RadialPoly operator*(const RadialPoly& a, const RadialPoly& b) {
  if (a.is_zero() || b.is_zero()) return RadialPoly::zero();
  // parity addition: even*even=even, even*odd=odd, odd*odd=even (extra r^2)
  bool both_odd = a.parity_ == Parity::Odd && b.parity_ == Parity::Odd;
  Parity p = (a.parity_ == b.parity_) ? Parity::Even : Parity::Odd;
  std::vector<Rational> out(a.coef_.size() + b.coef_.size(), Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i)
    for (std::size_t j = 0; j < b.coef_.size(); ++j) out[i + j + (both_odd ? 1 : 0)] += a.coef_[i] * b.coef_[j];
  return RadialPoly(p, std::move(out));
}

RadialPoly RadialPoly::scaled(const Rational& c) const {
  RadialPoly p = *this;
  for (auto& x : p.coef_) x *= c;
  while (!p.coef_.empty() && p.coef_.back().is_zero()) p.coef_.pop_back();
  return p;
}

Rational RadialPoly::eval_rational(const Rational& x) const {
  Rational x2 = x * x, acc(0);
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x2 + coef_[i];
  return parity_ == Parity::Odd ? acc * x : acc;
}

Interval RadialPoly::eval_interval(const Interval& x) const {
  if (coef_.empty()) return Interval(0.0);
  Interval x2 = x.square(), acc(0.0);
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * x2 + Interval::from_rational(coef_[i]);
  return parity_ == Parity::Odd ? acc * x : acc;
}

TaylorModel RadialPoly::to_taylor_model() const {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    std::size_t pow = 2 * i + (parity_ == Parity::Odd ? 1 : 0);
    if (c.size() <= pow) c.resize(pow + 1, Rational(0));
    c[pow] = coef_[i];
  }
  return TaylorModel::from_coeffs(std::move(c));
}

}  // namespace hemicert
