#include "hemicert/jacobi.hpp"

#include <stdexcept>

#include "hemicert/gamma_beta.hpp"

namespace hemicert {

Rational JacobiSolution::prefactor_rational_part() const {
  return Rational(n) / Rational(2L * (2 * k - 1) * (n + 2 * k));
}

JacobiSolution solve_jacobi(int n, int k, const Interval& c) {
  if (n < 2 || k < 1) throw std::invalid_argument("solve_jacobi: need n >= 2, k >= 1");
  JacobiSolution js;
  js.n = n;
  js.k = k;
  js.c = c;
  js.coeffs.assign(static_cast<std::size_t>(k) + 1, Rational(0));
  js.coeffs[static_cast<std::size_t>(k)] = Rational(1);
  for (int j = k - 1; j >= 0; --j)
    js.coeffs[static_cast<std::size_t>(j)] =
        Rational(2L * (j + 1), 2L * j - 1) * js.coeffs[static_cast<std::size_t>(j) + 1];

  js.shape = CosPoly::zero();
  for (int j = 0; j <= k; ++j)
    js.shape = js.shape +
               CosPoly::sin2k(static_cast<unsigned>(j)).scaled(js.coeffs[static_cast<std::size_t>(j)]);

  // (Δ̂ + n) shape must equal -(2k-1)(n+2k) sin^(2k) s, exactly.
  CosPoly lhs = laplace_beltrami(js.shape, n) + js.shape.scaled(Rational(n));
  CosPoly rhs = CosPoly::sin2k(static_cast<unsigned>(k))
                    .scaled(Rational(-(2L * k - 1) * (n + 2L * k)));
  if (lhs != rhs)
    throw std::logic_error("solve_jacobi: recurrence failed the symbolic identity");

  js.prefactor = Interval::from_rational(js.prefactor_rational_part()) * c;
  return js;
}

CosPoly sff_variation_shape(const JacobiSolution& js) {
  CosPoly op = js.shape.cot_ds() - js.shape.ds2();
  return op.scaled(Rational(js.n - 1, js.n));
}

SffIntegral sff_integral(int n, int k, const Interval& c) {
  if (n < 2 || k < 1) throw std::invalid_argument("sff_integral: need n >= 2, k >= 1");
  Rational ratio =
      beta_ratio(HalfInt{n + 2 * (k + 1)}, HalfInt{1}, HalfInt{n}, HalfInt{3}).value;
  SffIntegral out;
  out.rational_part = Rational(static_cast<long>(n - 1) * k, n + 2L * k) * ratio;
  out.value = Interval::from_rational(out.rational_part) * c;
  return out;
}

CosPoly h_prime_diffeo(const CosPoly& v, int n) {
  return -(laplace_beltrami(v, n) + v.scaled(Rational(n)));
}

}  // namespace hemicert
