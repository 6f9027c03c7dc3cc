#include "hemicert/quadrature.hpp"

#include <cmath>

namespace hemicert {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Gk15Result {
  double value;
  double err;
};

Gk15Result gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    double absc = h * kXgk[j];
    fv1[j] = f(c - absc);
    fv2[j] = f(c + absc);
    double fsum = fv1[j] + fv2[j];
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {resk * h, std::fabs((resk - resg) * h)};
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, int depth) {
  Gk15Result r = gk15(f, a, b);
  if (r.err <= tol || r.err <= 1e-16 * std::fabs(r.value)) return r.value;
  if (depth <= 0) throw QuadratureError("integrate: subdivision budget exhausted");
  double c = 0.5 * (a + b);
  return integrate_rec(f, a, c, 0.5 * tol, depth - 1) +
         integrate_rec(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  return integrate_rec(f, a, b, abs_tol, max_depth);
}

}  // namespace hemicert
