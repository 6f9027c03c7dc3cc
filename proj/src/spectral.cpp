#include "hemicert/spectral.hpp"

#include <cmath>

#include "hemicert/quadrature.hpp"

namespace hemicert {

Rational SphereMoment::weighted_over_plain() const {
  return Rational(1, 2) / (Rational(k) + Rational(n + 1, 2));
}

SphereMoment sphere_moment(int n, int k) {
  if (n < 1 || k < 0) throw std::domain_error("sphere_moment: need n >= 1, k >= 0");
  SphereMoment m;
  m.n = n;
  m.k = k;
  m.plain_beta = beta_sym(HalfInt{n + 2 * k}, HalfInt{1});
  m.weighted_beta = beta_sym(HalfInt{n + 2 * k}, HalfInt{3});
  double g = sphere_volume_double(n - 1);
  m.plain = beta_value_double(HalfInt{n + 2 * k}, HalfInt{1}) * g;
  m.weighted = beta_value_double(HalfInt{n + 2 * k}, HalfInt{3}) * g;
  return m;
}

SpectralVariation mu_values(int n, int k, const Rational& a, const Rational& b) {
  if (n < 2 || k < 1) throw std::domain_error("mu_values: need n >= 2, k >= 1");
  SpectralVariation sv;
  sv.n = n;
  sv.k = k;
  sv.a = a;
  sv.b = b;
  Rational R = mu_beta_ratio(n, k);
  sv.mu_sum = Rational(-n) * Rational(n + 1) * a + Rational(n) * R * b;
  sv.mu_n = Rational(-n) * a -
            b / Rational(2 * k + n + 1) * R * Rational(static_cast<long>(k) * (n - 2) - n);
  sv.mu_common = (sv.mu_sum - sv.mu_n) / Rational(n);
  return sv;
}

SignVerdict sign_pattern_check(const SpectralVariation& sv) {
  return (sv.mu_n.sign() < 0 && sv.mu_common.sign() > 0) ? SignVerdict::Pass
                                                         : SignVerdict::Fail;
}

double quadrature_oracle(const CosPoly& f, int n, SphereWeight weight, double abs_tol) {
  double g = sphere_volume_double(n - 1);
  auto integrand = [&](double s) {
    double c = std::cos(s);
    double v = f.eval_double(c);
    if (weight == SphereWeight::Xn2) v *= c * c;
    return v * std::pow(std::sin(s), n - 1);
  };
  return g * integrate(integrand, 0.0, M_PI, abs_tol / (g > 1 ? g : 1.0));
}

double mu_n_from_corollary_quadrature(int n, int k, double a, double b) {
  // f|_Σ = a - b(1-c²)^k; C_n = γ_n/(n+1); φ_n = c/√C_n.
  CosPoly f = CosPoly::constant(Rational(1)).scaled(Rational::from_double_exact(a)) -
              CosPoly::sin2k(static_cast<unsigned>(k)).scaled(Rational::from_double_exact(b));
  double gamma_n = sphere_volume_double(n);
  double Cn = gamma_n / (n + 1);
  double f_one = quadrature_oracle(f, n, SphereWeight::One);
  double f_phi2 = quadrature_oracle(f, n, SphereWeight::Xn2) / Cn;
  // mu_n = -<φ_n, Δ̂'φ_n> = (n-2)/2 <f,1>/C_n - (n+2)(n-1)/2 <f, φ_n²>
  return 0.5 * (n - 2) * f_one / Cn - 0.5 * (n + 2) * (n - 1) * f_phi2;
}

double offdiag_quadrature_n2(const CosPoly& f) {
  // S²: x_2 = cos s, x_1 = sin s cos u, dV = sin s ds du.
  // ∫∫ f(cos s) cos s · sin s cos u · sin s ds du; C_2 factors omitted
  // (we only assert vanishing).
  auto inner = [&](double s) {
    double c = std::cos(s);
    return f.eval_double(c) * c * std::sin(s) * std::sin(s);
  };
  double su = integrate([](double u) { return std::cos(u); }, 0.0, 2.0 * M_PI, 1e-13);
  double ss = integrate(inner, 0.0, M_PI, 1e-13);
  return ss * su;
}

}  // namespace hemicert
