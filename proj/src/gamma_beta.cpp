#include "hemicert/gamma_beta.hpp"

#include <cmath>

namespace hemicert {

GammaSym gamma_half(HalfInt x) {
  if (x.twice <= 0) throw std::domain_error("gamma_half: x must be positive");
  Rational rat(1);
  long t = x.twice;  // value t/2
  while (t > 2) {
    t -= 2;
    rat *= Rational(t, 2);  // Γ(v) = (v-1)Γ(v-1)
  }
  if (t == 2) return {rat, 0};   // reduced to Γ(1) = 1
  return {rat, 1};               // reduced to Γ(1/2) = √π
}

GammaSym beta_sym(HalfInt p, HalfInt q) {
  GammaSym gp = gamma_half(p), gq = gamma_half(q), gpq = gamma_half(p + q);
  return {gp.rat * gq.rat / gpq.rat, gp.sqrtpi_pow + gq.sqrtpi_pow - gpq.sqrtpi_pow};
}

BetaRatio beta_ratio(HalfInt p, HalfInt q, HalfInt p2, HalfInt q2) {
  GammaSym num = beta_sym(p, q), den = beta_sym(p2, q2);
  if (num.sqrtpi_pow != den.sqrtpi_pow)
    throw BetaRatioError("beta_ratio: sqrt(pi) content does not cancel");
  return {num.rat / den.rat};
}

Rational mu_beta_ratio(int n, int k) {
  if (n < 1 || k < 0) throw std::domain_error("mu_beta_ratio: need n >= 1, k >= 0");
  return beta_ratio(HalfInt{n + 2 * k}, HalfInt{1}, HalfInt{n}, HalfInt{3}).value;
}

double beta_value_double(HalfInt p, HalfInt q) {
  GammaSym b = beta_sym(p, q);
  return b.rat.to_double() * std::pow(M_PI, 0.5 * b.sqrtpi_pow);
}

double sphere_volume_double(int n) {
  GammaSym g = gamma_half(HalfInt{n + 1});
  return 2.0 * std::pow(M_PI, 0.5 * (n + 1)) / (g.rat.to_double() * std::pow(M_PI, 0.5 * g.sqrtpi_pow));
}

}  // namespace hemicert
