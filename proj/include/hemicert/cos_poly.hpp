#pragma once

#include <vector>

#include "hemicert/interval.hpp"
#include "hemicert/rational.hpp"

namespace hemicert {

/// Polynomial in c = cos s with exact rational coefficients. The boundary
/// functions (psi, the Jacobi solution v, the first eigenfunction cos s)
/// live here, and the Laplace-Beltrami operator on S^n acts exactly:
/// functions of s alone satisfy Δ̂f = (1-c²)f'' - n·c·f'.
class CosPoly {
 public:
  CosPoly() = default;
  explicit CosPoly(std::vector<Rational> coeffs);  // coeffs[i] * c^i

  static CosPoly zero() { return CosPoly(); }
  static CosPoly constant(const Rational& v);
  static CosPoly c();  // the coordinate cos s
  /// sin^(2j) s represented exactly as (1-c²)^j.
  static CosPoly sin2k(unsigned j);

  const std::vector<Rational>& coeffs() const { return coef_; }
  bool is_zero() const { return coef_.empty(); }
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  Rational coeff(std::size_t i) const {
    return i < coef_.size() ? coef_[i] : Rational(0);
  }

  CosPoly operator-() const;
  friend CosPoly operator+(const CosPoly& a, const CosPoly& b);
  friend CosPoly operator-(const CosPoly& a, const CosPoly& b);
  friend CosPoly operator*(const CosPoly& a, const CosPoly& b);
  CosPoly scaled(const Rational& v) const;
  friend bool operator==(const CosPoly& a, const CosPoly& b) { return a.coef_ == b.coef_; }
  friend bool operator!=(const CosPoly& a, const CosPoly& b) { return !(a == b); }

  /// d/dc, exact.
  CosPoly derive_c() const;
  /// ∂_s f = -sin s · f'(c); only the cot s ∂_s and ∂_s² composites stay in
  /// the class, so those are what we expose:
  /// cot s ∂_s f = -c f'(c).
  CosPoly cot_ds() const;
  /// ∂_s² f = (1-c²) f'' - c f'.
  CosPoly ds2() const;

  Rational eval_rational(const Rational& cv) const;
  double eval_double(double cv) const;
  Interval eval_interval(const Interval& cv) const;

 private:
  void trim();
  std::vector<Rational> coef_;
};

/// Exact Laplace-Beltrami action on S^n for functions of s alone:
/// (1-c²)f'' - n·c·f'.
CosPoly laplace_beltrami(const CosPoly& f, int n);

/// Exact mean over S^n: ∫_{S^n} f(cos s) dV / vol(S^n). Odd powers of c
/// integrate to zero; even powers reduce through the beta recurrence.
Rational sphere_mean(const CosPoly& f, int n);

}  // namespace hemicert
