#pragma once

#include <vector>

#include "hemicert/cos_poly.hpp"
#include "hemicert/interval.hpp"
#include "hemicert/rational.hpp"

namespace hemicert {

/// Explicit solution of (Δ̂ + n)v = (n/2)∂₀f|_Σ on Σ = S^n, with
/// ∂₀f|_Σ = -c·sin^(2k) s. v = prefactor · Σ_j a_j sin^(2j) s, where
/// a_k = 1 and a_j = (2(j+1)/(2j-1)) a_(j+1); prefactor = n·c/(2(2k-1)(n+2k)).
struct JacobiSolution {
  int n, k;
  Interval c;                      // Ḟ(π/2)
  std::vector<Rational> coeffs;    // a_0 ... a_k
  CosPoly shape;                   // Σ_j a_j (1-c²)^j, exact
  Interval prefactor;              // n c / (2(2k-1)(n+2k))
  Rational prefactor_rational_part() const;  // n / (2(2k-1)(n+2k))
};

/// Builds the solution and verifies the defining identity symbolically:
/// (Δ̂ + n)(shape) = -(2k-1)(n+2k)(1-c²)^k, exactly. Throws on failure.
JacobiSolution solve_jacobi(int n, int k, const Interval& c);

/// A'_11 = ((n-1)/n)(cot s ∂_s - ∂_s²)v. Returns the exact rational CosPoly
/// for the unit-prefactor solution; multiply by js.prefactor for the value.
CosPoly sff_variation_shape(const JacobiSolution& js);

/// ∫_Σ (∂_1 φ_(1,n))² A'_11 = (n-1)k c B(k+1+n/2, 1/2) / ((n+2k) B(n/2, 3/2)).
struct SffIntegral {
  Rational rational_part;  // (n-1)k/(n+2k) · beta ratio
  Interval value;          // rational_part · c
};

SffIntegral sff_integral(int n, int k, const Interval& c);

/// H' under the diffeomorphism deformation: -(Δ̂ + n)v, exact.
CosPoly h_prime_diffeo(const CosPoly& v, int n);

}  // namespace hemicert
