#pragma once

#include <vector>

#include "hemicert/interval.hpp"
#include "hemicert/rational.hpp"
#include "hemicert/taylor_model.hpp"

namespace hemicert {

enum class Parity { Even, Odd };

/// Polynomial in r restricted to one parity class: term i multiplies
/// r^(2i) (even) or r^(2i+1) (odd). F and its derivatives live here; the
/// parity flag is the smoothness bookkeeping through the pole r = 0.
class RadialPoly {
 public:
  RadialPoly() : parity_(Parity::Even) {}
  RadialPoly(Parity p, std::vector<Rational> coeffs);

  /// Even polynomial from coefficients of r^0, r^2, r^4, ...
  static RadialPoly even(std::vector<Rational> coeffs) {
    return RadialPoly(Parity::Even, std::move(coeffs));
  }
  static RadialPoly zero() { return RadialPoly(); }

  Parity parity() const { return parity_; }
  const std::vector<Rational>& coeffs() const { return coef_; }
  bool is_zero() const;
  int degree() const;  // -1 for the zero polynomial

  /// Exact formal derivative; flips parity.
  RadialPoly derivative() const;

  RadialPoly operator-() const;
  friend RadialPoly operator+(const RadialPoly& a, const RadialPoly& b);
  friend RadialPoly operator-(const RadialPoly& a, const RadialPoly& b);
  friend RadialPoly operator*(const RadialPoly& a, const RadialPoly& b);
  RadialPoly scaled(const Rational& c) const;

  Rational eval_rational(const Rational& x) const;
  /// Certified enclosure over x (Horner in x^2, outward rounding).
  Interval eval_interval(const Interval& x) const;

  /// Exact conversion to a Taylor model on [0, r_switch].
  TaylorModel to_taylor_model() const;

 private:
  Parity parity_;
  std::vector<Rational> coef_;
};

}  // namespace hemicert
