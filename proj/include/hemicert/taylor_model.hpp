#pragma once

#include <utility>
#include <vector>

#include "hemicert/interval.hpp"
#include "hemicert/rational.hpp"

namespace hemicert {

/// Rigorous polynomial model on the fixed domain [0, r_switch]:
///
///     f(r) ∈ P(r) + r^rem_pow · rem      for all r ∈ [0, r_switch],
///
/// with P carrying exact rational coefficients and the remainder carrying a
/// power weight so that removable singularities at r = 0 divide out exactly.
/// This is what evaluates the F-composites (F/sin²r, Ḟcot r, ...) where
/// direct interval arithmetic would blow up.
class TaylorModel {
 public:
  static constexpr int kMaxDeg = 40;
  /// r_switch = 1/8: switch point between series and direct evaluation.
  static const Rational& r_switch();
  static Interval r_switch_interval();

  TaylorModel() : rem_pow_(kMaxDeg + 1), rem_(0.0) {}

  static TaylorModel constant(const Rational& c);
  static TaylorModel variable();  // r
  /// coeffs[i] multiplies r^i.
  static TaylorModel from_coeffs(std::vector<Rational> coeffs);
  /// Pure weighted remainder r^pow * rem.
  static TaylorModel remainder_only(int pow, const Interval& rem);

  /// sin(r)/r and cos(r) on [0, r_switch].
  static const TaylorModel& sinc();
  static const TaylorModel& cosine();
  /// 1/sinc, 1/sinc^2 and r·cot r = cos/sinc.
  static const TaylorModel& recip_sinc();
  static const TaylorModel& recip_sinc2();
  static const TaylorModel& r_cot_r();

  const std::vector<Rational>& coeffs() const { return coef_; }
  int rem_pow() const { return rem_pow_; }
  const Interval& rem() const { return rem_; }

  TaylorModel operator-() const;
  friend TaylorModel operator+(const TaylorModel& a, const TaylorModel& b);
  friend TaylorModel operator-(const TaylorModel& a, const TaylorModel& b);
  friend TaylorModel operator*(const TaylorModel& a, const TaylorModel& b);
  TaylorModel scaled(const Rational& c) const;

  /// Exact division by r^p; requires the low p coefficients to vanish
  /// exactly and rem_pow >= p.
  TaylorModel shifted_down(int p) const;
  /// Multiplication by r^p (exact shift up).
  TaylorModel shifted_up(int p) const;

  /// 1/this; requires a nonzero constant term and |1 - this/c0| < 1 on the
  /// domain. `terms` controls the Neumann truncation.
  TaylorModel reciprocal(int terms = 8) const;

  /// Range enclosure over the whole domain [0, r_switch].
  Interval bound() const;

  /// Certified enclosure over X ⊆ [0, r_switch]. Evaluates in factored form
  /// r^v * (cofactor), so enclosures of quantities vanishing at 0 keep an
  /// exact zero endpoint.
  Interval eval(const Interval& x) const;

  /// Least i with coef[i] != 0 (rem_pow if the polynomial is zero).
  int vanish_order() const;

 private:
  void trim();
  std::vector<Rational> coef_;
  int rem_pow_;
  Interval rem_;
};

/// Immutable evaluation-ready form (interval coefficients precomputed);
/// safe to share across threads.
class FrozenTM {
 public:
  FrozenTM() : shift_(0), rem_shift_(0), rem_(0.0) {}
  explicit FrozenTM(const TaylorModel& tm);
  Interval eval(const Interval& x) const;

 private:
  int shift_;                  // factored-out power of r
  std::vector<Interval> co_;   // cofactor coefficients
  int rem_shift_;              // remaining remainder weight after factoring
  Interval rem_;
};

}  // namespace hemicert
