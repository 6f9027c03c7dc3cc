#include "hemicert/cos_poly.hpp"

#include <stdexcept>

namespace hemicert {

CosPoly::CosPoly(std::vector<Rational> coeffs) : coef_(std::move(coeffs)) { trim(); }

void CosPoly::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

CosPoly CosPoly::constant(const Rational& v) { return CosPoly({v}); }

CosPoly CosPoly::c() { return CosPoly({Rational(0), Rational(1)}); }

CosPoly CosPoly::sin2k(unsigned j) {
  CosPoly base({Rational(1), Rational(0), Rational(-1)});  // 1 - c^2
  CosPoly out = CosPoly::constant(1);
  for (unsigned i = 0; i < j; ++i) out = out * base;
  return out;
}

CosPoly CosPoly::operator-() const {
  CosPoly p = *this;
  for (auto& x : p.coef_) x = -x;
  return p;
}

CosPoly operator+(const CosPoly& a, const CosPoly& b) {
  std::vector<Rational> out(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) out[i] += a.coef_[i];
  for (std::size_t i = 0; i < b.coef_.size(); ++i) out[i] += b.coef_[i];
  return CosPoly(std::move(out));
}

CosPoly operator-(const CosPoly& a, const CosPoly& b) { return a + (-b); }

CosPoly operator*(const CosPoly& a, const CosPoly& b) {
  if (a.is_zero() || b.is_zero()) return CosPoly::zero();
  std::vector<Rational> out(a.coef_.size() + b.coef_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i)
    for (std::size_t j = 0; j < b.coef_.size(); ++j) out[i + j] += a.coef_[i] * b.coef_[j];
  return CosPoly(std::move(out));
}

CosPoly CosPoly::scaled(const Rational& v) const {
  CosPoly p = *this;
  for (auto& x : p.coef_) x *= v;
  p.trim();
  return p;
}

CosPoly CosPoly::derive_c() const {
  if (coef_.size() <= 1) return CosPoly::zero();
  std::vector<Rational> out(coef_.size() - 1, Rational(0));
  for (std::size_t i = 1; i < coef_.size(); ++i)
    out[i - 1] = Rational(static_cast<long>(i)) * coef_[i];
  return CosPoly(std::move(out));
}

CosPoly CosPoly::cot_ds() const { return -(CosPoly::c() * derive_c()); }

CosPoly CosPoly::ds2() const {
  CosPoly one_minus_c2({Rational(1), Rational(0), Rational(-1)});
  return one_minus_c2 * derive_c().derive_c() - CosPoly::c() * derive_c();
}

Rational CosPoly::eval_rational(const Rational& cv) const {
  Rational acc(0);
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * cv + coef_[i];
  return acc;
}

double CosPoly::eval_double(double cv) const {
  double acc = 0.0;
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * cv + coef_[i].to_double();
  return acc;
}

Interval CosPoly::eval_interval(const Interval& cv) const {
  Interval acc(0.0);
  for (std::size_t i = coef_.size(); i-- > 0;)
    acc = acc * cv + Interval::from_rational(coef_[i]);
  return acc;
}

CosPoly laplace_beltrami(const CosPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("laplace_beltrami: n >= 1 required");
  CosPoly one_minus_c2({Rational(1), Rational(0), Rational(-1)});
  return one_minus_c2 * f.derive_c().derive_c() -
         (CosPoly::c() * f.derive_c()).scaled(Rational(n));
}

Rational sphere_mean(const CosPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("sphere_mean: n >= 1 required");
  // moments m_j = mean of c^j: m_0 = 1, m_(j+2) = m_j (j+1)/(j+n+1), odd j -> 0.
  Rational acc(0), m(1);
  for (std::size_t j = 0; j < f.coeffs().size(); j += 2) {
    acc += f.coeff(j) * m;
    m *= Rational(static_cast<long>(j) + 1, static_cast<long>(j) + n + 1);
  }
  return acc;
}

}  // namespace hemicert
