#pragma once

#include <stdexcept>

#include "hemicert/rational.hpp"

namespace hemicert {

/// Positive half-integer: value = twice/2.
struct HalfInt {
  long twice;
  static HalfInt of_int(long n) { return {2 * n}; }
  static HalfInt half_odd(long n) { return {2 * n + 1}; }  // n + 1/2
  bool is_integer() const { return twice % 2 == 0; }
  friend HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
};

/// rat * pi^(sqrtpi_pow/2): the symbolic value of Γ and B at half-integers,
/// reduced by Γ(x+1) = xΓ(x) down to Γ(1) = 1 and Γ(1/2) = √π.
struct GammaSym {
  Rational rat;
  int sqrtpi_pow;
};

struct BetaRatioError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Γ(x) for positive half-integer x.
GammaSym gamma_half(HalfInt x);

/// B(p, q) = Γ(p)Γ(q)/Γ(p+q) for positive half-integers.
GammaSym beta_sym(HalfInt p, HalfInt q);

/// Exact rationality witness for a ratio of beta values.
struct BetaRatio {
  Rational value;
};

/// B(p,q) / B(p2,q2); throws BetaRatioError when the √π content does not
/// cancel (the ratio would be irrational).
BetaRatio beta_ratio(HalfInt p, HalfInt q, HalfInt p2, HalfInt q2);

/// The ratio B(k + n/2, 1/2) / B(n/2, 3/2) of the eigenvalue-variation
/// formulas; exactly rational for all n >= 1, k >= 0.
Rational mu_beta_ratio(int n, int k);

/// Numeric value of B(p,q) (rat * pi^(pow/2)) as a double, for oracles.
double beta_value_double(HalfInt p, HalfInt q);

/// vol(S^n) = 2 pi^((n+1)/2) / Γ((n+1)/2) as a double.
double sphere_volume_double(int n);

}  // namespace hemicert
