#include "hemicert/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace hemicert {

ConformalFactor ConformalFactor::make(int n, Rational a, RadialPoly F, Interval norm,
                                      int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("ConformalFactor: need n >= 2, k >= 1");
  ConformalFactor cf;
  cf.n = n;
  cf.a = std::move(a);
  cf.F_unnormalized = std::move(F);
  cf.norm = norm;
  cf.k = k;
  cf.env = std::make_shared<RadialEnv>(cf.F_unnormalized);
  Interval ph = pi_half_interval();
  cf.b = cf.F_unnormalized.eval_interval(ph) * norm;
  cf.c = cf.F_unnormalized.derivative().eval_interval(ph) * norm;
  return cf;
}

ConformalFactor ConformalFactor::monomial(int n, int k, int m) {
  if (n < 3 || k < 1 || m < 1)
    throw std::invalid_argument("ConformalFactor::monomial: need n >= 3, k, m >= 1");
  std::vector<Rational> co(static_cast<std::size_t>(m) + 1, Rational(0));
  co[static_cast<std::size_t>(m)] = Rational(1);
  return make(n, Rational(0), RadialPoly::even(std::move(co)), Interval(1.0), k);
}

double ConformalFactor::f_value(double r, double s) const {
  double F = F_unnormalized.eval_interval(Interval(r)).mid() * norm.mid();
  double ss = std::sin(s);
  return a.to_double() + F * (-std::pow(ss * ss, k));
}

namespace {

struct PsiParts {
  Interval psi;       // -sin^(2k) s
  Interval psid_cots; // ψ̇ cot s = -2k sin^(2k-2) s cos² s
  Interval psidd;     // ψ̈ = -2k(2k-1) sin^(2k-2)s cos²s + 2k sin^(2k)s
  Interval psid;      // ψ̇ = -2k sin^(2k-1) s cos s
};

PsiParts psi_parts(int k, const Interval& s) {
  PsiParts p{Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0)};
  Interval sig = sin2_enclosure(s);                       // sin² s
  Interval cos2 = (Interval(1.0) - sig).intersect(Interval(0.0, 1.0));  // cos² s
  Interval sig_km1 = sig.pow_int(static_cast<unsigned>(k - 1));
  Interval sig_k = sig_km1 * sig;
  double kk = 2.0 * k;
  p.psi = -sig_k;
  p.psid_cots = Interval(-kk) * sig_km1 * cos2;
  p.psidd = Interval(-kk * (2 * k - 1)) * sig_km1 * cos2 + Interval(kk) * sig_k;
  Interval sc = sincos_enclosure(s);  // sin s cos s
  p.psid = Interval(-kk) * sig_km1 * sc;
  return p;
}

}  // namespace

HessianBlocks hessian_blocks(const ConformalFactor& cf, const Interval& r,
                             const Interval& s) {
  const RadialEnv& env = *cf.env;
  PsiParts p = psi_parts(cf.k, s);
  Interval norm = cf.norm;
  Interval Fdd = env.eval(RadialEnv::kFdd, r) * norm;
  Interval q6 = env.eval(RadialEnv::kFOverSin2, r) * norm;   // F/sin²r
  Interval q17 = env.eval(RadialEnv::kFdCot, r) * norm;      // Ḟ cot r
  Interval q14 = env.eval(RadialEnv::kQ14, r) * norm;        // (Ḟ−Fcot r)/sin r

  HessianBlocks hb{Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0),
                   Interval(0.0), r, s};
  hb.h_rr = Fdd * p.psi;
  hb.h_rs = p.psid * q14;
  // (Fψ̈ + Ḟψ sin r cos r)/sin²r = ψ̈·(F/sin²r) + ψ·(Ḟ cot r)
  hb.h_ss = p.psidd * q6 + p.psi * q17;
  // (Fψ̇ sin s cos s + Ḟψ sin r cos r sin²s)/(sin²r sin²s) = ψ̇cot s·(F/sin²r) + ψ·(Ḟcot r)
  hb.h_sphere = p.psid_cots * q6 + p.psi * q17;
  hb.lap = hb.h_rr + hb.h_ss + Interval(static_cast<double>(cf.n - 1)) * hb.h_sphere;
  return hb;
}

ConditionTriple e1_e2_d(const ConformalFactor& cf, const Interval& r, const Interval& s) {
  HessianBlocks hb = hessian_blocks(cf, r, s);
  PsiParts p = psi_parts(cf.k, s);
  Interval F = cf.env->eval(RadialEnv::kF, r) * cf.norm;
  Interval f = Interval::from_rational(cf.a) + F * p.psi;
  Interval A = hb.lap + Interval(2.0 * cf.n) * f;
  Interval nm1(static_cast<double>(cf.n - 1));
  ConditionTriple out{Interval(0.0), Interval(0.0), Interval(0.0)};
  out.e1 = A + nm1 * hb.h_sphere;
  out.e2 = A + nm1 * hb.h_rr;
  Interval t_ss = A + nm1 * hb.h_ss;
  out.d = out.e2 * t_ss - (nm1 * hb.h_rs).square();
  return out;
}

SemidefiniteCheck semidefinite_oracle(const ConformalFactor& cf, double r, double s) {
  ConditionTriple ct = e1_e2_d(cf, Interval(r), Interval(s));
  HessianBlocks hb = hessian_blocks(cf, Interval(r), Interval(s));
  PsiParts p = psi_parts(cf.k, Interval(s));
  Interval F = cf.env->eval(RadialEnv::kF, Interval(r)) * cf.norm;
  Interval f = Interval::from_rational(cf.a) + F * p.psi;
  double A = (hb.lap + Interval(2.0 * cf.n) * f).mid();
  double nm1 = cf.n - 1;
  double t_rr = A + nm1 * hb.h_rr.mid();
  double t_ss = A + nm1 * hb.h_ss.mid();
  double t_rs = nm1 * hb.h_rs.mid();
  double t_sph = A + nm1 * hb.h_sphere.mid();
  double tr = t_rr + t_ss;
  double disc = std::sqrt(std::max(0.0, 0.25 * (t_rr - t_ss) * (t_rr - t_ss) + t_rs * t_rs));
  double block_max = 0.5 * tr + disc;
  double max_eig = std::max(block_max, t_sph);

  bool triple_ok = ct.e1.mid() < 0.0 && ct.e2.mid() <= 0.0 && ct.d.mid() >= 0.0;
  bool eig_ok = max_eig <= 0.0;
  return {max_eig, triple_ok == eig_ok};
}

double christoffel_hessian_oracle(const ConformalFactor& cf, double r, double s,
                                  double h) {
  auto fv = [&](double rr, double ss) { return cf.f_value(rr, ss); };
  double frr = (fv(r + h, s) - 2.0 * fv(r, s) + fv(r - h, s)) / (h * h);
  double fss = (fv(r, s + h) - 2.0 * fv(r, s) + fv(r, s - h)) / (h * h);
  double frs = (fv(r + h, s + h) - fv(r + h, s - h) - fv(r - h, s + h) + fv(r - h, s - h)) /
               (4.0 * h * h);
  double fr = (fv(r + h, s) - fv(r - h, s)) / (2.0 * h);
  double fs = (fv(r, s + h) - fv(r, s - h)) / (2.0 * h);
  double sr = std::sin(r), cr = std::cos(r), ss = std::sin(s), cs = std::cos(s);
  // ∇²f components in (r, s, u) coordinates, u one angle of S^(n-1)
  double raw_rr = frr;
  double raw_rs = frs - (cr / sr) * fs;
  double raw_ss = fss + sr * cr * fr;
  double raw_uu = sr * cr * ss * ss * fr + ss * cs * fs;

  HessianBlocks hb = hessian_blocks(cf, Interval(r), Interval(s));
  double dev = std::fabs(raw_rr - hb.h_rr.mid());
  dev = std::max(dev, std::fabs(raw_rs - hb.h_rs.mid() * sr));
  dev = std::max(dev, std::fabs(raw_ss - hb.h_ss.mid() * sr * sr));
  dev = std::max(dev, std::fabs(raw_uu - hb.h_sphere.mid() * sr * sr * ss * ss));
  return dev;
}

CosPoly mean_curvature_first_order_shape(const ConformalFactor& cf) {
  // (n/2)·∂_r f|_Σ = (n/2)·c·ψ; the rational shape is -(n/2)(1-c²)^k.
  return CosPoly::sin2k(static_cast<unsigned>(cf.k)).scaled(Rational(-cf.n, 2));
}

double conformal_H_exact(double H, double f_val, double d0f, int n) {
  return std::exp(-0.5 * f_val) * (H + 0.5 * n * d0f);
}

}  // namespace hemicert
