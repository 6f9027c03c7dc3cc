#include "hemicert/dim2.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace hemicert {

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

RadialPoly f2_poly(CoeffVariant v) {
  long den10 = v == CoeffVariant::Eq ? 429925 : 429975;
  return RadialPoly::even({Rational(0), Rational(1), Rational(-1, 21), Rational(4, 315),
                           Rational(1, 945), Rational(74, den10)});
}

}  // namespace

Dim2Config build_F2_with_a(CoeffVariant variant, const Rational& a) {
  Dim2Config cfg;
  cfg.variant = variant;
  RadialPoly F = f2_poly(variant);
  Interval C = F.eval_interval(pi_half_interval());
  cfg.C = C;
  cfg.cf = ConformalFactor::make(2, a, F, Interval(1.0) / C, 1);
  return cfg;
}

Dim2Config build_F2(CoeffVariant variant) {
  return build_F2_with_a(variant, Rational(400001, 1000000));
}

Dim2Config::RowQ Dim2Config::row(const Interval& r) const {
  RadialEnv::Core c = cf.env->eval_core(r);
  Interval norm = cf.norm;
  RowQ q{Interval(0.0), Interval(0.0), Interval(0.0),
         Interval(0.0), Interval(0.0), Interval(0.0)};
  q.q3 = c.Fdd * norm;
  q.q6 = c.f_over_sin2 * norm;
  q.q10 = (2.0 * c.Fdd + 3.0 * c.fd_cot + 4.0 * c.F - 4.0 * c.f_over_sin2) * norm;
  q.q12 = (c.Fdd + 2.0 * c.fd_cot + 4.0 * c.F - 2.0 * c.f_over_sin2) * norm;
  q.q14 = c.q14 * norm;
  q.q17 = c.fd_cot * norm;
  return q;
}

Interval QBoundValue::value(const Interval& C) const {
  return Interval::from_rational(p) + Interval::from_rational(q) * C;
}

namespace {

using Tag = RadialEnv::Tag;
using Expr = std::vector<std::pair<Rational, Tag>>;

QBoundValue no_bound() { return QBoundValue{false, Rational(0), Rational(0)}; }
QBoundValue times_C(const Rational& q) { return QBoundValue{true, Rational(0), q}; }
QBoundValue exact(const Rational& p) { return QBoundValue{true, p, Rational(0)}; }

struct SymPair {
  bool present = false;
  Rational p, q;
};

QBoundSpec make_spec(int index, Expr expr, QBoundValue lo, QBoundValue up,
                     QRoute lo_route = QRoute::Bisect, QRoute up_route = QRoute::Bisect) {
  QBoundSpec s;
  s.index = index;
  s.expr = std::move(expr);
  s.lower = lo;
  s.upper = up;
  s.lower_route = lo_route;
  s.upper_route = up_route;
  return s;
}

std::vector<QBoundSpec> build_specs() {
  const Rational one(1);
  std::vector<QBoundSpec> v;
  v.push_back(make_spec(1, {{one, Tag::kF}}, exact(Rational(0)), times_C(Rational(1)),
                        QRoute::Bisect, QRoute::MonotoneViaFd));
  v.push_back(make_spec(2, {{one, Tag::kFd}}, exact(Rational(0)), times_C(Rational(3, 2))));
  v.push_back(make_spec(3, {{one, Tag::kFdd}}, exact(Rational(0)), times_C(Rational(12, 5))));
  v.push_back(make_spec(4, {{one, Tag::kFddd}}, times_C(Rational(-3, 4)), times_C(Rational(51, 10))));
  v.push_back(make_spec(5, {{one, Tag::kQ5}}, exact(Rational(0)), times_C(Rational(9, 5))));
  v.push_back(make_spec(6, {{one, Tag::kFOverSin2}}, exact(Rational(1)), times_C(Rational(1)),
                        QRoute::Bisect, QRoute::MonotoneViaQ5));
  v.push_back(make_spec(7,
                        {{one, Tag::kFdd}, {Rational(3), Tag::kFdCot}, {Rational(4), Tag::kF},
                         {Rational(-2), Tag::kFOverSin2}},
                        times_C(Rational(19, 10)), no_bound()));
  v.push_back(make_spec(8,
                        {{one, Tag::kFdd}, {one, Tag::kFdCot}, {Rational(2), Tag::kF},
                         {Rational(-1), Tag::kFOverSin2}},
                        times_C(Rational(11, 10)), no_bound()));
  v.push_back(make_spec(9,
                        {{one, Tag::kFdd}, {Rational(2), Tag::kFdCot}, {Rational(4), Tag::kF},
                         {Rational(-6), Tag::kFOverSin2}},
                        times_C(Rational(-51, 10)), times_C(Rational(17, 10))));
  v.push_back(make_spec(10,
                        {{Rational(2), Tag::kFdd}, {Rational(3), Tag::kFdCot},
                         {Rational(4), Tag::kF}, {Rational(-4), Tag::kFOverSin2}},
                        times_C(Rational(-23, 10)), times_C(Rational(61, 10))));
  v.push_back(make_spec(11,
                        {{Rational(2), Tag::kFdd}, {Rational(3), Tag::kFdCot},
                         {Rational(4), Tag::kF}, {Rational(-10), Tag::kFOverSin2}},
                        times_C(Rational(-11)), times_C(Rational(17, 5))));
  v.push_back(make_spec(12,
                        {{one, Tag::kFdd}, {Rational(2), Tag::kFdCot}, {Rational(4), Tag::kF},
                         {Rational(-2), Tag::kFOverSin2}},
                        times_C(Rational(7, 10)), times_C(Rational(47, 10))));
  v.push_back(make_spec(13, {{one, Tag::kFdCot}, {Rational(-3), Tag::kFOverSin2}},
                        times_C(Rational(-26, 5)), exact(Rational(0))));
  v.push_back(make_spec(14, {{one, Tag::kQ14}}, exact(Rational(0)), times_C(Rational(79, 50))));
  v.push_back(make_spec(15, {{one, Tag::kQ15}}, exact(Rational(0)), times_C(Rational(41, 10))));
  v.push_back(make_spec(16, {{one, Tag::kQ16}}, times_C(Rational(-18, 5)), exact(Rational(0))));
  v.push_back(make_spec(17, {{one, Tag::kFdCot}}, exact(Rational(0)), times_C(Rational(9, 10)),
                        QRoute::MonotoneViaQ16, QRoute::MonotoneViaQ16));
  v.push_back(make_spec(18, {{one, Tag::kQ18}}, times_C(Rational(-33, 10)), times_C(Rational(71, 10))));
  return v;
}

SymPair pi_half_symbolic(int index) {
  // Exact values at r = pi/2, on the unnormalized p + qC scale, for the
  // bounds attained there: F(pi/2) = C, (F/sin²r)(pi/2) = C, Ḟcot(pi/2) = 0.
  SymPair s;
  if (index == 1 || index == 6) {
    s.present = true;
    s.p = Rational(0);
    s.q = Rational(1);
  } else if (index == 17) {
    s.present = true;
    s.p = Rational(0);
    s.q = Rational(0);
  }
  return s;
}

}  // namespace

const std::vector<QBoundSpec>& qbound_specs() {
  static const std::vector<QBoundSpec> specs = build_specs();
  return specs;
}

QBoundSpec qbound_spec_vi_tightened() {
  QBoundSpec s = qbound_specs()[5];
  s.lower = QBoundValue{true, Rational(0), Rational(41, 100)};  // 0.41, as in §4.1.4
  return s;
}

namespace {

TaylorModel expr_taylor(const RadialEnv& env, const Expr& expr) {
  TaylorModel t;
  for (const auto& [c, tag] : expr) t = t + env.taylor(tag).scaled(c);
  return t;
}

Interval expr_direct(const RadialEnv& env, const Expr& expr, const Interval& x) {
  Interval v(0.0);
  for (const auto& [c, tag] : expr)
    v += Interval::from_rational(c) * env.eval_direct(tag, x);
  return v;
}

Interval expr_eval(const RadialEnv& env, const FrozenTM& tm, const Expr& expr,
                   const Interval& x) {
  const double rs = 0.125;
  if (x.hi() <= rs) return tm.eval(x);
  if (x.lo() >= rs) return expr_direct(env, expr, x);
  return Interval::hull2(tm.eval(Interval(x.lo(), rs)), expr_direct(env, expr, Interval(rs, x.hi())));
}

enum class SideResult { Certified, Falsified, Inconclusive };

struct SideOutcome {
  SideResult result = SideResult::Inconclusive;
  long leaves = 0;
  int depth = 0;
  double witness = -1.0;
};

// One-sided adaptive bisection: certify expr >= bound (lower) or <= bound
// (upper) on [0, pi/2]. Rational bounds (q == 0) get the exact
// difference-Taylor-model treatment near r = 0 so that bounds attained at
// r = 0 still certify.
SideOutcome bisect_side(const Dim2Config& cfg, const QBoundSpec& spec, bool lower,
                        int max_depth) {
  const RadialEnv& env = *cfg.cf.env;
  const QBoundValue& b = lower ? spec.lower : spec.upper;
  TaylorModel qtm = expr_taylor(env, spec.expr);
  bool rational_bound = b.q.is_zero();
  TaylorModel diff = lower ? qtm - TaylorModel::constant(b.p)
                           : TaylorModel::constant(b.p) - qtm;
  FrozenTM qtm_f(qtm);
  FrozenTM diff_f(diff);
  Interval bound_iv = b.value(cfg.C);

  struct Item {
    double lo, hi;
    int depth;
  };
  std::vector<Item> stack{{0.0, pi_half_interval().hi(), 0}};
  SideOutcome out;
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    out.depth = std::max(out.depth, it.depth);
    Interval x(it.lo, it.hi);
    bool ok = false;
    if (rational_bound && x.hi() <= 0.125) {
      ok = diff_f.eval(x).lo() >= 0.0;
    } else {
      Interval encl = expr_eval(env, qtm_f, spec.expr, x);
      if (rational_bound) {
        ok = lower ? Rational::from_double_exact(encl.lo()) >= b.p
                   : Rational::from_double_exact(encl.hi()) <= b.p;
      } else {
        ok = lower ? encl.lo() >= bound_iv.hi() : encl.hi() <= bound_iv.lo();
      }
    }
    if (ok) {
      ++out.leaves;
      continue;
    }
    // refutation probe at the midpoint
    double m = 0.5 * (it.lo + it.hi);
    Interval pt = expr_eval(env, qtm_f, spec.expr, Interval(m));
    bool refuted = lower ? pt.hi() < bound_iv.lo() : pt.lo() > bound_iv.hi();
    if (refuted) {
      out.result = SideResult::Falsified;
      out.witness = m;
      return out;
    }
    if (it.depth >= max_depth) {
      out.result = SideResult::Inconclusive;
      return out;
    }
    double split = (it.lo < 0.125 && it.hi > 0.125) ? 0.125 : m;
    stack.push_back({it.lo, split, it.depth + 1});
    stack.push_back({split, it.hi, it.depth + 1});
  }
  out.result = SideResult::Certified;
  return out;
}

enum class Cmp { CertifiedTrue, CertifiedFalse, Unknown };

// a <= b where a = (pa + qa C), b = (pb + qb C)
Cmp sym_leq(const Rational& pa, const Rational& qa, const Rational& pb,
            const Rational& qb, const Interval& C) {
  if (qa == qb) return pa <= pb ? Cmp::CertifiedTrue : Cmp::CertifiedFalse;
  Interval diff = Interval::from_rational(pa - pb) + Interval::from_rational(qa - qb) * C;
  if (diff.hi() <= 0.0) return Cmp::CertifiedTrue;
  if (diff.lo() > 0.0) return Cmp::CertifiedFalse;
  return Cmp::Unknown;
}

struct MonoOutcome {
  SideResult result = SideResult::Inconclusive;
  std::string note;
};

// Monotone route: certify the derivative-sign prerequisite by bisection,
// then compare the exact endpoint value against the bound.
MonoOutcome mono_side(const Dim2Config& cfg, const QBoundSpec& spec, bool lower,
                      QRoute route, int max_depth) {
  const auto& specs = qbound_specs();
  MonoOutcome mo;
  bool increasing;
  SideOutcome prereq;
  switch (route) {
    case QRoute::MonotoneViaFd:
      prereq = bisect_side(cfg, specs[1], /*lower=*/true, max_depth);
      increasing = true;
      mo.note = "monotone via Fdot >= 0";
      break;
    case QRoute::MonotoneViaQ5:
      prereq = bisect_side(cfg, specs[4], /*lower=*/true, max_depth);
      increasing = true;
      mo.note = "monotone via Q5 >= 0";
      break;
    case QRoute::MonotoneViaQ16:
      prereq = bisect_side(cfg, specs[15], /*lower=*/false, max_depth);
      increasing = false;
      mo.note = "monotone via Q16 <= 0";
      break;
    default:
      throw std::logic_error("mono_side: not a monotone route");
  }
  if (prereq.result != SideResult::Certified) {
    mo.result = prereq.result;
    return mo;
  }
  // extremal endpoint: sup for upper bounds, inf for lower bounds
  bool at_pi_half = (increasing && !lower) || (!increasing && lower);
  Rational vp, vq;
  if (at_pi_half) {
    SymPair s = pi_half_symbolic(spec.index);
    if (!s.present) {
      // fall back to the interval value at pi/2
      Interval v = expr_direct(*cfg.cf.env, spec.expr, pi_half_interval());
      Interval bound_iv = (lower ? spec.lower : spec.upper).value(cfg.C);
      bool ok = lower ? v.lo() >= bound_iv.hi() : v.hi() <= bound_iv.lo();
      mo.result = ok ? SideResult::Certified : SideResult::Inconclusive;
      return mo;
    }
    vp = s.p;
    vq = s.q;
  } else {
    // limit at r -> 0+: the constant coefficient of the Taylor model
    TaylorModel qtm = expr_taylor(*cfg.cf.env, spec.expr);
    vp = qtm.coeffs().empty() ? Rational(0) : qtm.coeffs()[0];
    vq = Rational(0);
  }
  const QBoundValue& b = lower ? spec.lower : spec.upper;
  Cmp c = lower ? sym_leq(b.p, b.q, vp, vq, cfg.C) : sym_leq(vp, vq, b.p, b.q, cfg.C);
  mo.result = c == Cmp::CertifiedTrue    ? SideResult::Certified
              : c == Cmp::CertifiedFalse ? SideResult::Falsified
                                         : SideResult::Inconclusive;
  return mo;
}

Interval expr_hull(const Dim2Config& cfg, const Expr& expr, int cells) {
  const RadialEnv& env = *cfg.cf.env;
  FrozenTM tm(expr_taylor(env, expr));
  double hi = pi_half_interval().hi();
  Interval hull = expr_eval(env, tm, expr, Interval(0.0, hi / cells));
  for (int i = 1; i < cells; ++i) {
    Interval x(hi * i / cells, hi * (i + 1) / cells);
    hull = Interval::hull2(hull, expr_eval(env, tm, expr, x));
  }
  return hull;
}

}  // namespace

QBoundCertificate certify_qbound(const Dim2Config& cfg, const QBoundSpec& spec,
                                 int max_depth) {
  double t0 = now_seconds();
  QBoundCertificate cert;
  cert.index = spec.index;

  SideResult results[2] = {SideResult::Certified, SideResult::Certified};
  for (int side = 0; side < 2; ++side) {
    bool lower = side == 0;
    const QBoundValue& b = lower ? spec.lower : spec.upper;
    if (!b.present) continue;
    QRoute route = lower ? spec.lower_route : spec.upper_route;
    if (route == QRoute::Bisect) {
      SideOutcome so = bisect_side(cfg, spec, lower, max_depth);
      results[side] = so.result;
      cert.leaves += so.leaves;
      cert.depth_used = std::max(cert.depth_used, so.depth);
      if (so.result == SideResult::Falsified) cert.witness_r = so.witness;
    } else {
      MonoOutcome mo = mono_side(cfg, spec, lower, route, max_depth);
      results[side] = mo.result;
      if (!mo.note.empty()) {
        if (!cert.notes.empty()) cert.notes += "; ";
        cert.notes += (lower ? "lower: " : "upper: ") + mo.note;
      }
    }
  }

  if (results[0] == SideResult::Falsified || results[1] == SideResult::Falsified)
    cert.verdict = Verdict::Falsified;
  else if (results[0] == SideResult::Certified && results[1] == SideResult::Certified)
    cert.verdict = Verdict::Certified;
  else
    cert.verdict = Verdict::Inconclusive;

  // certified range hull (normalized), for reporting and the D-derivative
  // arithmetic
  Interval norm = cfg.cf.norm;
  cert.hull = expr_hull(cfg, spec.expr, 256) * norm;
  cert.seconds = now_seconds() - t0;
  return cert;
}

QHulls certified_hulls(const Dim2Config& cfg, int cells) {
  const auto& specs = qbound_specs();
  Interval norm = cfg.cf.norm;
  auto hull_of = [&](int idx) { return expr_hull(cfg, specs[static_cast<std::size_t>(idx - 1)].expr, cells) * norm; };
  QHulls h{Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0),
           Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0),
           Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0), Interval(0.0),
           Interval(0.0)};
  h.q3 = hull_of(3);
  h.q4 = hull_of(4);
  h.q5 = hull_of(5);
  h.q6 = hull_of(6);
  h.q9 = hull_of(9);
  h.q10 = hull_of(10);
  h.q11 = hull_of(11);
  h.q12 = hull_of(12);
  h.q13 = hull_of(13);
  h.q14 = hull_of(14);
  h.q15 = hull_of(15);
  h.q16 = hull_of(16);
  h.q17 = hull_of(17);
  h.q18 = hull_of(18);
  Interval four_a = Interval::from_rational(Rational(4) * cfg.cf.a);
  h.lap = four_a - Interval::hull2(h.q12, 4.0 * h.q6);
  h.dlap = -Interval::hull2(h.q18, 4.0 * h.q5);
  return h;
}

LapBoundsCertificate certify_lap_bounds(const QHulls& h, const Interval& four_a) {
  LapBoundsCertificate c;
  c.lap_range = four_a - Interval::hull2(h.q12, 4.0 * h.q6);
  c.dlap_range = -Interval::hull2(h.q18, 4.0 * h.q5);
  c.verdict = (c.lap_range.mag() <= 3.1 && c.dlap_range.mag() <= 7.2)
                  ? Verdict::Certified
                  : Verdict::Falsified;
  return c;
}

E1E2Certificate certify_E1_E2_with_bounds(const Interval& four_a, const Interval& q6_lo,
                                          const Interval& q7_lo, const Interval& q8_lo) {
  E1E2Certificate c;
  double m1 = std::min(6.0 * q6_lo.lo(), q7_lo.lo());
  double m2 = std::min(4.0 * q6_lo.lo(), 2.0 * q8_lo.lo());
  c.margin_e1 = m1 - four_a.hi();
  c.margin_e2 = m2 - four_a.hi();
  c.verdict = (c.margin_e1 > 0.0 && c.margin_e2 > 0.0) ? Verdict::Certified
                                                       : Verdict::Falsified;
  return c;
}

E1E2Certificate certify_E1_E2(const Dim2Config& cfg) {
  // prerequisites: (vi) with the 0.41 lower bound, (vii), (viii)
  const auto& specs = qbound_specs();
  QBoundCertificate vi = certify_qbound(cfg, qbound_spec_vi_tightened());
  QBoundCertificate vii = certify_qbound(cfg, specs[6]);
  QBoundCertificate viii = certify_qbound(cfg, specs[7]);
  Interval four_a = Interval::from_rational(Rational(4) * cfg.cf.a);
  E1E2Certificate c = certify_E1_E2_with_bounds(
      four_a, Interval::from_rational(Rational(41, 100)),
      Interval::from_rational(Rational(19, 10)), Interval::from_rational(Rational(11, 10)));
  if (vi.verdict != Verdict::Certified || vii.verdict != Verdict::Certified ||
      viii.verdict != Verdict::Certified)
    c.verdict = Verdict::Inconclusive;

  // direct interval route: E1 = 4a - σ·Q7 - (1-σ)·6Q6, E2 = 4a - σ·2Q8 - (1-σ)·4Q6,
  // convex in σ, certified < 0 by bisection in r.
  const RadialEnv& env = *cfg.cf.env;
  const Expr& e7 = specs[6].expr;
  const Expr& e8 = specs[7].expr;
  const Expr& e6 = specs[5].expr;
  FrozenTM t7(expr_taylor(env, e7)), t8(expr_taylor(env, e8)), t6(expr_taylor(env, e6));
  Interval norm = cfg.cf.norm;
  auto direct = [&](const Expr& e, const FrozenTM& tm, double coef) -> Verdict {
    struct Item { double lo, hi; int depth; };
    std::vector<Item> stack{{0.0, pi_half_interval().hi(), 0}};
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      Interval x(it.lo, it.hi);
      Interval qa = expr_eval(env, tm, e, x) * norm * Interval(coef);
      Interval qb = expr_eval(env, t6, e6, x) * norm * Interval(coef == 1.0 ? 6.0 : 4.0);
      Interval val = four_a - Interval::hull2(qa, qb);
      if (val.hi() < 0.0) continue;
      if (it.depth >= 40) return Verdict::Inconclusive;
      double m = 0.5 * (it.lo + it.hi);
      double split = (it.lo < 0.125 && it.hi > 0.125) ? 0.125 : m;
      stack.push_back({it.lo, split, it.depth + 1});
      stack.push_back({split, it.hi, it.depth + 1});
    }
    return Verdict::Certified;
  };
  c.direct_e1 = direct(e7, t7, 1.0);
  c.direct_e2 = direct(e8, t8, 2.0);
  if (c.direct_e1 != Verdict::Certified || c.direct_e2 != Verdict::Certified)
    c.verdict = Verdict::Inconclusive;
  return c;
}

DerivativeBounds d_derivative_bounds(const QHulls& h, const Interval& four_a) {
  Interval sig(0.0, 1.0), cos2s(-1.0, 1.0), sin2sq(0.0, 1.0);
  // convex combinations in σ: P1 = 4a - conv(Q12, 4Q6), P2 = 4a - conv(Q10, 6Q6)
  Interval P1 = four_a - Interval::hull2(h.q12, 4.0 * h.q6);
  Interval P2 = four_a - Interval::hull2(h.q10, 6.0 * h.q6);
  // -∂_s D / sin 2s = Q9 P2 + Q3(-2Q13 σ - 2Q6 cos²s) + Q11 P1 + 4Q14² cos 2s
  Interval inner = -Interval::hull2(2.0 * h.q13, 2.0 * h.q6);
  Interval ds = h.q9 * P2 + h.q3 * inner + h.q11 * P1 + 4.0 * h.q14.square() * cos2s;
  // ∂_r D = -(Δf+4f)(2Q5 cos2s + (Q4+Q16)σ) - 2Q14 Q15 sin²2s
  //         + ∂_r(Δf+4f)(P1 + P2) + Q4(2Q6 cos2s + Q17 σ)σ + Q3(2Q5 cos2s + Q16 σ)σ
  Interval dr = -h.lap * (2.0 * h.q5 * cos2s + (h.q4 + h.q16) * sig) -
                2.0 * h.q14 * h.q15 * sin2sq + h.dlap * (P1 + P2) +
                h.q4 * (2.0 * h.q6 * cos2s + h.q17 * sig) * sig +
                h.q3 * (2.0 * h.q5 * cos2s + h.q16 * sig) * sig;
  DerivativeBounds db;
  db.bound_s = ds.mag();
  db.bound_r = dr.mag();
  db.lip_euclidean = detail::sqrt_up(detail::add_up(detail::mul_up(db.bound_s, db.bound_s),
                                                    detail::mul_up(db.bound_r, db.bound_r)));
  db.verdict = (db.bound_s <= 80.0 && db.bound_r <= 202.0) ? Verdict::Certified
                                                           : Verdict::Falsified;
  return db;
}

}  // namespace hemicert
