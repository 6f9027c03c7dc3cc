#pragma once

#include <functional>
#include <stdexcept>

namespace hemicert {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive 15-point Gauss-Kronrod integration of f over [a, b] to the given
/// absolute tolerance. Throws QuadratureError if the subdivision budget is
/// exhausted before the error estimate converges.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-13, int max_depth = 48);

}  // namespace hemicert
