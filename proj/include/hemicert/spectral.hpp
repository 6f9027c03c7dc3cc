#pragma once

#include "hemicert/cos_poly.hpp"
#include "hemicert/gamma_beta.hpp"
#include "hemicert/rational.hpp"

namespace hemicert {

/// The two sphere integrals behind the eigenvalue-variation formulas:
///   plain    = ∫_{S^n} (1-x_n²)^k dV = B(k+n/2, 1/2) γ_{n-1}
///   weighted = ∫_{S^n} x_n² (1-x_n²)^k dV = B(k+n/2, 3/2) γ_{n-1}
/// stored symbolically (beta part) plus double approximations.
struct SphereMoment {
  int n, k;
  GammaSym plain_beta;
  GammaSym weighted_beta;
  double plain;     // includes γ_{n-1}
  double weighted;  // includes γ_{n-1}
  /// weighted/plain = (1/2)/(k + (n+1)/2), exact by the beta identity.
  Rational weighted_over_plain() const;
};

SphereMoment sphere_moment(int n, int k);

/// First-order variations of the (n+1)-fold first boundary eigenvalue under
/// g' = f ḡ with f|_Σ = a − b(1−x_n²)^k; exact rationals in a, b.
struct SpectralVariation {
  int n, k;
  Rational a, b;
  Rational mu_n;
  Rational mu_common;  // the shared value of mu_i for i < n
  Rational mu_sum;     // over i = 0..n
};

SpectralVariation mu_values(int n, int k, const Rational& a, const Rational& b);

enum class SignVerdict { Pass, Fail };

/// PASS iff mu_n < 0 and mu_common > 0 (strict, exact rational comparison).
SignVerdict sign_pattern_check(const SpectralVariation& sv);

/// Independent cross-check of mu_n through the Corollary after the conformal
/// variation lemma, evaluated by numeric quadrature:
///   -<φ_n, Δ̂'φ_n> = (n-2)/2 · <f,1>/C_n - (n+2)(n-1)/2 · <f, φ_n²>.
double mu_n_from_corollary_quadrature(int n, int k, double a, double b);

enum class SphereWeight { One, Xn2 };

/// γ_{n-1} ∫_0^π f(cos s) · weight · sin^{n-1} s ds by adaptive quadrature.
double quadrature_oracle(const CosPoly& f, int n, SphereWeight weight,
                         double abs_tol = 1e-13);

/// Two-angle oracle at n = 2 for the off-diagonal integrals:
/// ∫_{S²} f(cos s) · φ_{1,2} φ_{1,1} dV with φ_{1,2} ∝ cos s, φ_{1,1} ∝ sin s cos u.
double offdiag_quadrature_n2(const CosPoly& f);

}  // namespace hemicert
