#pragma once

#include <memory>

#include "hemicert/cos_poly.hpp"
#include "hemicert/interval.hpp"
#include "hemicert/radial_env.hpp"
#include "hemicert/radial_poly.hpp"

namespace hemicert {

/// The separable conformal factor f = a + F(r)ψ(s) with ψ = -sin^(2k) s.
/// F is stored unnormalized with exact rational coefficients; `norm` is the
/// interval enclosure of the normalizer (1/C for the n = 2 polynomial,
/// exactly 1 for the monomials). b = F(π/2), c = Ḟ(π/2), both normalized.
struct ConformalFactor {
  int n = 2;
  Rational a;
  RadialPoly F_unnormalized;
  Interval norm{1.0};
  int k = 1;
  Interval b{0.0};
  Interval c{0.0};
  std::shared_ptr<const RadialEnv> env;  // composites of the unnormalized F

  static ConformalFactor make(int n, Rational a, RadialPoly F_unnormalized,
                              Interval norm, int k);
  /// The n >= 3 monomial family F = r^(2m), a = 0, ψ = -sin^(2k) s.
  static ConformalFactor monomial(int n, int k, int m);

  double f_value(double r, double s) const;
};

/// The four distinct entries of the Hessian endomorphism ḡ⁻¹∇²f in the
/// orthonormal frame adapted to the warped product, plus the Laplacian.
struct HessianBlocks {
  Interval h_rr;      // F̈ψ
  Interval h_rs;      // ψ̇(Ḟ - F cot r)/sin r
  Interval h_ss;      // (Fψ̈ + Ḟψ sin r cos r)/sin²r
  Interval h_sphere;  // (F ψ̇ cot s + Ḟψ sin r cos r)/sin²r, the (n-1)-fold entry
  Interval lap;       // Δf
  Interval r, s;
};

/// Certified enclosures over r ⊆ [0, π/2], s ⊆ [0, π]; removable
/// singularities at r = 0 go through the Taylor models.
HessianBlocks hessian_blocks(const ConformalFactor& cf, const Interval& r,
                             const Interval& s);

struct ConditionTriple {
  Interval e1, e2, d;
};

/// The three scalar conditions: E1 (lower-right block), E2 (upper-left
/// entry), D (upper-left 2x2 determinant) of the endomorphism
/// (Δf + 2nf)Id + (n-1)ḡ⁻¹∇²f.
ConditionTriple e1_e2_d(const ConformalFactor& cf, const Interval& r, const Interval& s);

struct SemidefiniteCheck {
  double max_eigenvalue;
  bool consistent;  // (max_eigenvalue <= 0) == (E1 < 0 && E2 <= 0 && D >= 0)
};

/// Assembles the (n+1)x(n+1) endomorphism at an interior point and compares
/// its sign against the E1/E2/D reduction (float midpoint arithmetic).
SemidefiniteCheck semidefinite_oracle(const ConformalFactor& cf, double r, double s);

/// Componentwise ∇²f via finite differences and the closed-form Christoffel
/// symbols; returns the max deviation from the hessian_blocks midpoints.
double christoffel_hessian_oracle(const ConformalFactor& cf, double r, double s,
                                  double fd_step = 1e-5);

/// H' = (n/2)∂_r f|_Σ = (n/2)·c·ψ: the rational CosPoly -(n/2)(1-c²)^k, to be
/// scaled by the interval c. This is what the Jacobi correction must cancel.
CosPoly mean_curvature_first_order_shape(const ConformalFactor& cf);

/// Exact mean curvature under the conformal metric e^f g:
/// e^(-f/2)(H + (n/2)·d0f).
double conformal_H_exact(double H, double f_val, double d0f, int n);

}  // namespace hemicert
