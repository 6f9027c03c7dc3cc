#include "hemicert/trig.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hemicert {

namespace {

// Series through k = kTerms-1, i.e. degree 2*kTerms-1 for sin. On |x| <= 3.3
// the Lagrange tail is below 1.5e-21 and is carried explicitly.
constexpr int kTerms = 17;

struct SeriesTables {
  std::array<Interval, kTerms> sin_c;  // (-1)^k / (2k+1)!
  std::array<Interval, kTerms> cos_c;  // (-1)^k / (2k)!
  Interval sin_tail_c;                 // 1 / (2*kTerms+1)!
  Interval cos_tail_c;                 // 1 / (2*kTerms)!

  SeriesTables() : sin_tail_c(0.0), cos_tail_c(0.0) {
    for (int k = 0; k < kTerms; ++k) {
      Rational fact_2k(1);
      for (int j = 2; j <= 2 * k; ++j) fact_2k *= Rational(j);
      Rational fact_2k1 = fact_2k * Rational(2 * k + 1 > 1 ? 2 * k + 1 : 1);
      Rational s = Rational(1) / fact_2k1;
      Rational c = Rational(1) / fact_2k;
      if (k % 2 == 1) {
        s = -s;
        c = -c;
      }
      sin_c[static_cast<std::size_t>(k)] = Interval::from_rational(s);
      cos_c[static_cast<std::size_t>(k)] = Interval::from_rational(c);
    }
    Rational fact(1);
    for (int j = 2; j <= 2 * kTerms; ++j) fact *= Rational(j);
    cos_tail_c = Interval::from_rational(Rational(1) / fact);
    fact *= Rational(2 * kTerms + 1);
    sin_tail_c = Interval::from_rational(Rational(1) / fact);
  }
};

const SeriesTables& tables() {
  static const SeriesTables t;
  return t;
}

void require_series_domain(const Interval& x) {
  if (x.mag() > 3.3)
    throw std::domain_error("trig series: |x| > 3.3 unsupported");
}

Interval symmetric(const Interval& m) { return Interval(-m.hi(), m.hi()); }

}  // namespace

Interval sin_series(const Interval& x) {
  require_series_domain(x);
  const auto& t = tables();
  Interval y = x.square();
  Interval p = t.sin_c[kTerms - 1];
  for (int k = kTerms - 2; k >= 0; --k) p = p * y + t.sin_c[static_cast<std::size_t>(k)];
  Interval tail = t.sin_tail_c * x.abs().pow_int(2 * kTerms + 1);
  return x * p + symmetric(tail);
}

Interval cos_series(const Interval& x) {
  require_series_domain(x);
  const auto& t = tables();
  Interval y = x.square();
  Interval p = t.cos_c[kTerms - 1];
  for (int k = kTerms - 2; k >= 0; --k) p = p * y + t.cos_c[static_cast<std::size_t>(k)];
  Interval tail = t.cos_tail_c * x.abs().pow_int(2 * kTerms);
  return p + symmetric(tail);
}

namespace {

Interval clamp(const Interval& v, double lo, double hi) {
  return Interval(std::max(v.lo(), lo), std::min(v.hi(), hi));
}

void require_0_pi(const Interval& x) {
  if (x.lo() < 0.0 || x.hi() > pi_interval().hi())
    throw std::domain_error("trig enclosure: argument outside [0, pi]");
}

}  // namespace

Interval sin_enclosure(const Interval& x) {
  require_0_pi(x);
  Interval ph = pi_half_interval();
  Interval at_lo = sin_series(Interval(x.lo()));
  Interval at_hi = sin_series(Interval(x.hi()));
  if (x.hi() <= ph.lo())  // increasing branch
    return clamp(Interval(at_lo.lo(), at_hi.hi()), 0.0, 1.0);
  if (x.lo() >= ph.hi())  // decreasing branch
    return clamp(Interval(at_hi.lo(), at_lo.hi()), 0.0, 1.0);
  double lo = std::min(at_lo.lo(), at_hi.lo());
  return clamp(Interval(lo, 1.0), 0.0, 1.0);
}

Interval cos_enclosure(const Interval& x) {
  require_0_pi(x);
  Interval at_lo = cos_series(Interval(x.lo()));
  Interval at_hi = cos_series(Interval(x.hi()));
  return clamp(Interval(at_hi.lo(), at_lo.hi()), -1.0, 1.0);
}

Interval sin2_enclosure(const Interval& x) { return sin_enclosure(x).square(); }

Interval sincos_enclosure(const Interval& x) {
  require_0_pi(x);
  // sin(2x)/2; reduce via symmetry sin(2x) = sin(2(pi - x)) to stay in the
  // series domain, splitting at pi/2 where needed.
  Interval ph = pi_half_interval();
  if (x.hi() <= ph.lo()) return sin_series(x + x) * Interval(0.5);
  if (x.lo() >= ph.hi()) {
    Interval refl = pi_interval() - x;  // ⊆ [0, pi/2] up to rounding
    return -(sin_series(refl + refl) * Interval(0.5));
  }
  Interval left(x.lo(), ph.hi());
  Interval right(ph.lo(), x.hi());
  Interval a = sin_series(left + left) * Interval(0.5);
  Interval refl = pi_interval() - right;
  Interval b = -(sin_series(Interval(std::max(0.0, refl.lo()), refl.hi()) * 2.0) * Interval(0.5));
  return Interval::hull2(a, b);
}

Interval cot_enclosure(const Interval& x) {
  if (x.lo() <= 0.0 || x.hi() >= pi_interval().lo())
    throw std::domain_error("cot: argument must stay inside (0, pi)");
  Interval at_hi = cos_series(Interval(x.hi())) / sin_series(Interval(x.hi()));
  Interval at_lo = cos_series(Interval(x.lo())) / sin_series(Interval(x.lo()));
  return Interval(at_hi.lo(), at_lo.hi());  // decreasing
}

Interval csc2_enclosure(const Interval& x) {
  if (x.lo() <= 0.0 || x.hi() >= pi_interval().lo())
    throw std::domain_error("1/sin^2: argument must stay inside (0, pi)");
  Interval ph = pi_half_interval();
  Interval at_lo = Interval(1.0) / sin_series(Interval(x.lo())).square();
  Interval at_hi = Interval(1.0) / sin_series(Interval(x.hi())).square();
  if (x.hi() <= ph.lo())  // decreasing branch
    return Interval(at_hi.lo(), at_lo.hi());
  if (x.lo() >= ph.hi())  // increasing branch
    return Interval(at_lo.lo(), at_hi.hi());
  // may contain pi/2, where the global minimum 1 is attained
  return Interval(1.0, std::max(at_lo.hi(), at_hi.hi()));
}

Interval xcotx_enclosure(const Interval& x) {
  if (x.lo() < 0.0 || x.hi() > pi_half_interval().hi())
    throw std::domain_error("x*cot(x): argument outside [0, pi/2]");
  auto pt = [](double t) {
    Interval it(t);
    return it * cos_series(it) / sin_series(it);
  };
  double hi = x.lo() == 0.0 ? 1.0 : pt(x.lo()).hi();  // decreasing, limit 1 at 0
  double lo = x.hi() == 0.0 ? 1.0 : pt(x.hi()).lo();
  return Interval(std::min(lo, hi), std::max(lo, hi));
}

Interval x2_over_sin2_enclosure(const Interval& x) {
  if (x.lo() < 0.0 || x.hi() > pi_half_interval().hi())
    throw std::domain_error("x^2/sin^2(x): argument outside [0, pi/2]");
  auto pt = [](double t) {
    Interval it(t);
    return it.square() / sin_series(it).square();
  };
  double lo = x.lo() == 0.0 ? 1.0 : pt(x.lo()).lo();  // increasing, limit 1 at 0
  double hi = x.hi() == 0.0 ? 1.0 : pt(x.hi()).hi();
  return Interval(std::min(lo, hi), std::max(lo, hi));
}

Interval interval_env(TrigExpr expr, const Interval& x) {
  switch (expr) {
    case TrigExpr::Sin: return sin_enclosure(x);
    case TrigExpr::Cos: return cos_enclosure(x);
    case TrigExpr::Sin2: return sin2_enclosure(x);
    case TrigExpr::XCotX: return xcotx_enclosure(x);
    case TrigExpr::X2OverSin2: return x2_over_sin2_enclosure(x);
    case TrigExpr::InvSin2: return csc2_enclosure(x);
    case TrigExpr::Cot: return cot_enclosure(x);
  }
  throw std::logic_error("interval_env: unknown tag");
}

}  // namespace hemicert
