#include "hemicert/highdim.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hemicert/taylor_model.hpp"
#include "hemicert/trig.hpp"

namespace hemicert {

namespace {

double wall_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

Interval pi_squared() { return pi_interval().square(); }

}  // namespace

ParamChoice check_params(int n, int k, int m, PiCondition convention) {
  ParamChoice pc;
  pc.n = n;
  pc.k = k;
  pc.m = m;
  pc.convention = convention;
  pc.degree_condition = 2 * m - 1 >= 2 * (n - 1);
  Interval pi2 = pi_squared();
  if (convention == PiCondition::Printed) {
    // 2m-1 >= 8k/pi^2  <=>  (2m-1) pi^2 >= 8k
    pc.pi_sq_condition = (Interval(static_cast<double>(2 * m - 1)) * pi2).lo() >= 8.0 * k;
  } else {
    // 2m-1 >= pi^2 k / 2  <=>  2(2m-1) >= k pi^2
    pc.pi_sq_condition =
        2.0 * (2 * m - 1) >= (Interval(static_cast<double>(k)) * pi2).hi();
  }
  long lhs = static_cast<long>(2 * m - 1) * (2 * m - 1) * (n + 2 * k - 2);
  long rhs = static_cast<long>(2 * m) * (2 * k + 2 * m - 1) * (n - 1);
  pc.ratio_condition = lhs > rhs;
  return pc;
}

ParamChoice find_m(int n, int k, PiCondition convention) {
  if (n < 3) throw std::domain_error("find_m: n >= 3 required");
  if (static_cast<long>(k) * (n - 2) <= n)
    throw std::domain_error("find_m: k <= n/(n-2) rejected (mu_n sign would fail)");
  for (int m = 1; m <= 10000; ++m) {
    ParamChoice pc = check_params(n, k, m, convention);
    if (pc.conditions_met()) return pc;
  }
  throw std::logic_error("find_m: no m found below cap");
}

namespace {

/// The primitive r-quantities the L/D expressions are built from.
struct Prims {
  Interval rcot;  // r cot r
  Interval w;     // r^2 / sin^2 r
  Interval s2;    // sin^2 r
  Interval rsc;   // r sin r cos r
  Interval r2;    // r^2
};

Prims prims_direct(const Interval& r) {
  Prims p{Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0)};
  p.rcot = xcotx_enclosure(r);
  p.w = x2_over_sin2_enclosure(r);
  p.s2 = sin2_enclosure(r);
  p.rsc = r * sincos_enclosure(r);
  p.r2 = r.square();
  return p;
}

struct DCoeffs {
  Interval L0, lambda, d0, d1, d2;
};

DCoeffs d_coeffs_from_prims(int n, int k, int m, const Prims& p) {
  double nm1 = n - 1;
  Interval L0 = Interval(-2.0 * m * (2 * m - 1)) - Interval(2.0 * m * n) * p.rcot +
                Interval(2.0 * k) * p.w - Interval(2.0 * n) * p.r2;
  Interval lam = Interval(2.0 * k * (2 * k + n - 2)) * p.w;
  Interval kr2 = Interval(static_cast<double>(k)) * p.r2;
  Interval d0 = L0.square() * p.s2 +
                Interval(2.0 * nm1) * L0 *
                    (kr2 - Interval(static_cast<double>(m) * (2 * m - 1)) * p.s2 -
                     Interval(static_cast<double>(m)) * p.rsc) -
                Interval(4.0 * nm1 * nm1 * m * (2 * m - 1)) *
                    (kr2 - Interval(static_cast<double>(m)) * p.rsc);
  Interval d1 = Interval(-2.0) * L0 * lam * p.s2 +
                Interval(4.0 * nm1 * nm1 * k * k) * p.r2 *
                    (Interval(4.0 * m) * p.rcot - p.rcot.square()) -
                Interval(2.0 * nm1) * lam *
                    (kr2 - Interval(static_cast<double>(m) * (2 * m - 1)) * p.s2) +
                Interval(2.0 * nm1 * m) * lam * p.rsc -
                Interval(2.0 * nm1 * k * (2 * k - 1)) * L0 * p.r2 -
                Interval(4.0 * nm1 * nm1 * k * m * (2 * k + 2 * m - 1)) * p.r2;
  Interval d2 = lam.square() * p.s2 + Interval(2.0 * nm1 * k * (2 * k - 1)) * lam * p.r2;
  return {L0, lam, d0, d1, d2};
}

/// Taylor models of L0, lambda, d0, d1, d2 on [0, r_switch].
struct DTms {
  FrozenTM L0, lambda, d0, d1, d2;
};

DTms build_d_tms(int n, int k, int m) {
  const TaylorModel& rcot = TaylorModel::r_cot_r();
  const TaylorModel& w = TaylorModel::recip_sinc2();
  TaylorModel s2 = (TaylorModel::sinc() * TaylorModel::sinc()).shifted_up(2);
  TaylorModel rsc = (TaylorModel::sinc() * TaylorModel::cosine()).shifted_up(2);
  TaylorModel r2 = TaylorModel::variable() * TaylorModel::variable();
  const Rational nm1(n - 1);

  TaylorModel L0 = TaylorModel::constant(Rational(-2L * m * (2 * m - 1))) +
                   rcot.scaled(Rational(-2L * m * n)) + w.scaled(Rational(2L * k)) +
                   r2.scaled(Rational(-2L * n));
  TaylorModel lam = w.scaled(Rational(2L * k * (2 * k + n - 2)));
  TaylorModel kr2 = r2.scaled(Rational(k));
  TaylorModel t1 = kr2 - s2.scaled(Rational(static_cast<long>(m) * (2 * m - 1))) -
                   rsc.scaled(Rational(m));
  TaylorModel t2 = kr2 - rsc.scaled(Rational(m));
  TaylorModel d0 = L0 * L0 * s2 + (L0 * t1).scaled(nm1 * 2) -
                   t2.scaled(nm1 * nm1 * Rational(4L * m * (2 * m - 1)));
  TaylorModel d1 =
      (L0 * lam * s2).scaled(Rational(-2)) +
      (r2 * (rcot.scaled(Rational(4L * m)) - rcot * rcot))
          .scaled(nm1 * nm1 * Rational(4L * k * k)) -
      (lam * (kr2 - s2.scaled(Rational(static_cast<long>(m) * (2 * m - 1))))).scaled(nm1 * 2) +
      (lam * rsc).scaled(nm1 * Rational(2L * m)) -
      (L0 * r2).scaled(nm1 * Rational(2L * k * (2 * k - 1))) -
      r2.scaled(nm1 * nm1 * Rational(4L * k * m * (2 * k + 2 * m - 1)));
  TaylorModel d2 = lam * lam * s2 + (lam * r2).scaled(nm1 * Rational(2L * k * (2 * k - 1)));
  return {FrozenTM(L0), FrozenTM(lam), FrozenTM(d0), FrozenTM(d1), FrozenTM(d2)};
}

DCoeffs d_coeffs_eval(int n, int k, int m, const DTms& tms, const Interval& r) {
  const double rs = 0.125;
  if (r.hi() <= rs)
    return {tms.L0.eval(r), tms.lambda.eval(r), tms.d0.eval(r), tms.d1.eval(r),
            tms.d2.eval(r)};
  if (r.lo() >= rs) return d_coeffs_from_prims(n, k, m, prims_direct(r));
  DCoeffs a = d_coeffs_eval(n, k, m, tms, Interval(r.lo(), rs));
  DCoeffs b = d_coeffs_eval(n, k, m, tms, Interval(rs, r.hi()));
  return {Interval::hull2(a.L0, b.L0), Interval::hull2(a.lambda, b.lambda),
          Interval::hull2(a.d0, b.d0), Interval::hull2(a.d1, b.d1),
          Interval::hull2(a.d2, b.d2)};
}

}  // namespace

LValue l_value(int n, int k, int m, const Interval& r) {
  DTms tms = build_d_tms(n, k, m);
  DCoeffs c = d_coeffs_eval(n, k, m, tms, r);
  return {c.L0, c.lambda};
}

ChainCertificate verify_chain(const ParamChoice& pc, int subdivision) {
  double t0 = wall_seconds();
  ChainCertificate cc;
  cc.pc = pc;
  if (!pc.conditions_met()) cc.notes = "sufficient conditions not all met; certifying directly";

  const int n = pc.n, k = pc.k, m = pc.m;
  DTms tms = build_d_tms(n, k, m);
  const double top = pi_half_interval().hi();

  bool l0_ok = true, d_ok = true;
  bool l0_falsified = false, d_falsified = false;

  for (int i = 0; i < subdivision && !(l0_falsified || d_falsified); ++i) {
    Interval cell(top * i / subdivision, top * (i + 1) / subdivision);
    ++cc.leaves;
    DCoeffs c = d_coeffs_eval(n, k, m, tms, cell);
    // E1 < 0 and E2 < 0 both reduce to L0 < 0 (lambda >= 0 and the extra
    // terms are nonpositive multiples).
    if (!(c.L0.hi() < 0.0)) {
      l0_ok = false;
      if (c.L0.lo() > 0.0) l0_falsified = true;
    }
    // D >= 0 over u = cot²s in [0, inf): d0 >= 0, d2 >= 0 and
    // (d1 >= 0 or d1² <= 4 d0 d2).
    bool cell_d_ok = c.d0.lo() >= 0.0 && c.d2.lo() >= 0.0 &&
                     (c.d1.lo() >= 0.0 || c.d1.square().hi() <= (4.0 * c.d0 * c.d2).lo());
    if (!cell_d_ok) {
      d_ok = false;
      // refutation probe at the midpoint
      Interval mid(cell.mid());
      DCoeffs cm = d_coeffs_eval(n, k, m, tms, mid);
      if (cm.d0.hi() < 0.0) {
        d_falsified = true;
        cc.witness_r = cell.mid();
        cc.witness_s = pi_half_interval().lo();  // u = 0 is s = pi/2
      } else if (cm.d2.lo() > 0.0 && cm.d1.hi() < 0.0) {
        Interval vertex_min = cm.d0 - cm.d1.square() / (4.0 * cm.d2);
        if (vertex_min.hi() < 0.0) {
          d_falsified = true;
          cc.witness_r = cell.mid();
          double ustar = -cm.d1.mid() / (2.0 * cm.d2.mid());
          cc.witness_s = std::atan(1.0 / std::sqrt(ustar));
        }
      }
    }
  }

  cc.e1 = l0_falsified ? Verdict::Falsified
                       : (l0_ok ? Verdict::Certified : Verdict::Inconclusive);
  cc.e2 = cc.e1;
  cc.d = d_falsified ? Verdict::Falsified
                     : (d_ok ? Verdict::Certified : Verdict::Inconclusive);
  if (cc.e1 == Verdict::Falsified || cc.d == Verdict::Falsified)
    cc.overall = Verdict::Falsified;
  else if (cc.e1 == Verdict::Certified && cc.d == Verdict::Certified)
    cc.overall = Verdict::Certified;
  else
    cc.overall = Verdict::Inconclusive;
  cc.seconds = wall_seconds() - t0;
  return cc;
}

ChainCertificate verify_chain(int n, int k, int m, int subdivision,
                              PiCondition convention) {
  return verify_chain(check_params(n, k, m, convention), subdivision);
}

}  // namespace hemicert
