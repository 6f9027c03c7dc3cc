#include "hemicert/taylor_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace hemicert {

namespace {

// Monomial-wise range bound of sum c_i * r^(i) over [0, rho], exact rational
// endpoints. r^i ranges over [0, rho^i], so each monomial contributes
// [min(0, c*rho^i), max(0, c*rho^i)].
std::pair<Rational, Rational> poly_range_rational(const std::vector<Rational>& c,
                                                  const Rational& rho) {
  Rational lo(0), hi(0), p(1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational term = c[i] * p;
    if (term.sign() >= 0)
      hi += term;
    else
      lo += term;
    p *= rho;
  }
  return {lo, hi};
}

Rational pow_rational(const Rational& base, int e) {
  return base.pow(static_cast<unsigned>(e));
}

}  // namespace

const Rational& TaylorModel::r_switch() {
  static const Rational rho(1, 8);
  return rho;
}

Interval TaylorModel::r_switch_interval() { return Interval(0.125); }

void TaylorModel::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

TaylorModel TaylorModel::constant(const Rational& c) {
  TaylorModel t;
  t.coef_ = {c};
  t.trim();
  return t;
}

TaylorModel TaylorModel::variable() {
  TaylorModel t;
  t.coef_ = {Rational(0), Rational(1)};
  return t;
}

TaylorModel TaylorModel::from_coeffs(std::vector<Rational> coeffs) {
  if (static_cast<int>(coeffs.size()) > kMaxDeg + 1)
    throw std::invalid_argument("TaylorModel: degree too large");
  TaylorModel t;
  t.coef_ = std::move(coeffs);
  t.trim();
  return t;
}

TaylorModel TaylorModel::remainder_only(int pow, const Interval& rem) {
  TaylorModel t;
  t.rem_pow_ = pow;
  t.rem_ = rem;
  return t;
}

int TaylorModel::vanish_order() const {
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (!coef_[i].is_zero()) return static_cast<int>(i);
  return rem_pow_;
}

TaylorModel TaylorModel::operator-() const {
  TaylorModel t = *this;
  for (auto& c : t.coef_) c = -c;
  t.rem_ = -t.rem_;
  return t;
}

namespace {

// r^from * R contained in r^to * (widened R), for to <= from.
Interval reduce_weight(const Interval& rem, int from, int to, const Rational& rho) {
  if (rem.lo() == 0.0 && rem.hi() == 0.0) return rem;
  if (from == to) return rem;
  Rational scale = pow_rational(rho, from - to);
  return Interval(0.0, scale.double_above()) * rem;
}

}  // namespace

TaylorModel operator+(const TaylorModel& a, const TaylorModel& b) {
  TaylorModel t;
  t.coef_.assign(std::max(a.coef_.size(), b.coef_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) t.coef_[i] += a.coef_[i];
  for (std::size_t i = 0; i < b.coef_.size(); ++i) t.coef_[i] += b.coef_[i];
  t.trim();
  bool az = a.rem_.lo() == 0 && a.rem_.hi() == 0;
  bool bz = b.rem_.lo() == 0 && b.rem_.hi() == 0;
  if (az && bz) {
    t.rem_pow_ = std::max(a.rem_pow_, b.rem_pow_);
    t.rem_ = Interval(0.0);
  } else if (az) {
    t.rem_pow_ = b.rem_pow_;
    t.rem_ = b.rem_;
  } else if (bz) {
    t.rem_pow_ = a.rem_pow_;
    t.rem_ = a.rem_;
  } else {
    t.rem_pow_ = std::min(a.rem_pow_, b.rem_pow_);
    t.rem_ = reduce_weight(a.rem_, a.rem_pow_, t.rem_pow_, TaylorModel::r_switch()) +
             reduce_weight(b.rem_, b.rem_pow_, t.rem_pow_, TaylorModel::r_switch());
  }
  return t;
}

TaylorModel operator-(const TaylorModel& a, const TaylorModel& b) { return a + (-b); }

TaylorModel operator*(const TaylorModel& a, const TaylorModel& b) {
  const Rational& rho = TaylorModel::r_switch();
  TaylorModel t;
  // Polynomial convolution, spilling degrees > kMaxDeg into a weighted tail.
  std::vector<Rational> conv(a.coef_.size() + b.coef_.size(), Rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) {
      if (b.coef_[j].is_zero()) continue;
      conv[i + j] += a.coef_[i] * b.coef_[j];
    }
  }
  int spill_pow = TaylorModel::kMaxDeg + 1;
  Rational spill_lo(0), spill_hi(0);
  bool has_spill = false;
  t.coef_.assign(std::min<std::size_t>(conv.size(), spill_pow), Rational(0));
  for (std::size_t kdx = 0; kdx < conv.size(); ++kdx) {
    if (static_cast<int>(kdx) <= TaylorModel::kMaxDeg) {
      t.coef_[kdx] = conv[kdx];
    } else if (!conv[kdx].is_zero()) {
      has_spill = true;
      Rational term = conv[kdx] * pow_rational(rho, static_cast<int>(kdx) - spill_pow);
      if (term.sign() >= 0)
        spill_hi += term;
      else
        spill_lo += term;
    }
  }
  t.trim();

  struct Piece {
    int pow;
    Interval val;
  };
  std::vector<Piece> pieces;
  if (has_spill)
    pieces.push_back({spill_pow, Interval::from_rationals(spill_lo, spill_hi)});

  bool az = a.rem_.lo() == 0 && a.rem_.hi() == 0;
  bool bz = b.rem_.lo() == 0 && b.rem_.hi() == 0;
  auto shifted_bound = [&rho](const std::vector<Rational>& c) -> std::pair<int, Interval> {
    int v = -1;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) { v = static_cast<int>(i); break; }
    if (v < 0) return {0, Interval(0.0)};
    std::vector<Rational> shifted(c.begin() + v, c.end());
    auto [lo, hi] = poly_range_rational(shifted, rho);
    return {v, Interval::from_rationals(lo, hi)};
  };
  if (!bz && !a.coef_.empty()) {
    auto [va, ba] = shifted_bound(a.coef_);
    pieces.push_back({va + b.rem_pow_, ba * b.rem_});
  }
  if (!az && !b.coef_.empty()) {
    auto [vb, bb] = shifted_bound(b.coef_);
    pieces.push_back({vb + a.rem_pow_, bb * a.rem_});
  }
  if (!az && !bz) pieces.push_back({a.rem_pow_ + b.rem_pow_, a.rem_ * b.rem_});

  if (pieces.empty()) {
    t.rem_pow_ = TaylorModel::kMaxDeg + 1;
    t.rem_ = Interval(0.0);
  } else {
    int p = pieces[0].pow;
    for (const auto& pc : pieces) p = std::min(p, pc.pow);
    Interval sum(0.0);
    for (const auto& pc : pieces) sum += reduce_weight(pc.val, pc.pow, p, rho);
    t.rem_pow_ = p;
    t.rem_ = sum;
  }
  return t;
}

TaylorModel TaylorModel::scaled(const Rational& c) const {
  TaylorModel t = *this;
  for (auto& x : t.coef_) x *= c;
  t.trim();
  t.rem_ = t.rem_ * Interval::from_rational(c);
  return t;
}

TaylorModel TaylorModel::shifted_down(int p) const {
  TaylorModel t;
  if (rem_pow_ < p)
    throw std::logic_error("TaylorModel: remainder weight too small for shift");
  for (int i = 0; i < p && i < static_cast<int>(coef_.size()); ++i)
    if (!coef_[static_cast<std::size_t>(i)].is_zero())
      throw std::logic_error("TaylorModel: inexact division by r^p");
  if (static_cast<int>(coef_.size()) > p)
    t.coef_.assign(coef_.begin() + p, coef_.end());
  t.rem_pow_ = rem_pow_ - p;
  t.rem_ = rem_;
  return t;
}

TaylorModel TaylorModel::shifted_up(int p) const {
  TaylorModel t;
  if (static_cast<int>(coef_.size()) + p > kMaxDeg + 1)
    throw std::logic_error("TaylorModel: shift overflows degree budget");
  t.coef_.assign(coef_.size() + static_cast<std::size_t>(p), Rational(0));
  for (std::size_t i = 0; i < coef_.size(); ++i) t.coef_[i + static_cast<std::size_t>(p)] = coef_[i];
  t.rem_pow_ = rem_pow_ + p;
  t.rem_ = rem_;
  return t;
}

Interval TaylorModel::bound() const {
  auto [lo, hi] = poly_range_rational(coef_, r_switch());
  Interval b = Interval::from_rationals(lo, hi);
  if (!(rem_.lo() == 0 && rem_.hi() == 0))
    b += reduce_weight(rem_, rem_pow_, 0, r_switch());
  return b;
}

TaylorModel TaylorModel::reciprocal(int terms) const {
  if (coef_.empty() || coef_[0].is_zero())
    throw std::logic_error("TaylorModel: reciprocal needs nonzero constant term");
  const Rational c0 = coef_[0];
  TaylorModel e = TaylorModel::constant(Rational(1)) - scaled(Rational(1) / c0);
  // e vanishes at 0; Neumann series 1/(1-e) = sum e^j + e^(terms+1)/(1-e).
  Interval eb = e.bound();
  double B = eb.mag();
  if (!(B < 1.0))
    throw std::logic_error("TaylorModel: reciprocal Neumann series diverges");
  int ve = std::min(e.vanish_order(), e.rem_pow_);
  // sup |e / r^ve| on the domain
  TaylorModel eshift = e.shifted_down(ve);
  double M = eshift.bound().mag();

  TaylorModel sum = TaylorModel::constant(Rational(1));
  TaylorModel epow = e;
  for (int j = 1; j <= terms; ++j) {
    sum = sum + epow;
    if (j < terms) epow = epow * e;
  }
  // tail = e^(terms+1) / (1-e): |tail| <= r^(ve*(terms+1)) * M^(terms+1)/(1-B)
  double tail_mag = 1.0;
  for (int j = 0; j <= terms; ++j) tail_mag = detail::mul_up(tail_mag, M);
  tail_mag = detail::div_up(tail_mag, detail::sub_down(1.0, B));
  int tail_pow = std::min(ve * (terms + 1), kMaxDeg + 1);
  TaylorModel tail = TaylorModel::remainder_only(tail_pow, Interval(-tail_mag, tail_mag));
  return (sum + tail).scaled(Rational(1) / c0);
}

Interval TaylorModel::eval(const Interval& x) const {
  return FrozenTM(*this).eval(x);
}

namespace {

TaylorModel build_sinc() {
  std::vector<Rational> c(TaylorModel::kMaxDeg + 1, Rational(0));
  Rational fact(1);  // (2k+1)!
  for (int k = 0; 2 * k <= TaylorModel::kMaxDeg; ++k) {
    if (k > 0)
      for (int j = 2 * k; j <= 2 * k + 1; ++j) fact *= Rational(j);
    Rational term = Rational(1) / fact;
    if (k % 2 == 1) term = -term;
    c[static_cast<std::size_t>(2 * k)] = term;
  }
  // alternating series: |tail| <= r^(kMaxDeg+2) / (kMaxDeg+3)!
  Rational tfact(1);
  for (int j = 2; j <= TaylorModel::kMaxDeg + 3; ++j) tfact *= Rational(j);
  Interval trem = Interval::from_rational(Rational(1) / tfact);
  TaylorModel t = TaylorModel::from_coeffs(std::move(c));
  return t + TaylorModel::remainder_only(TaylorModel::kMaxDeg + 2,
                                         Interval(-trem.hi(), trem.hi()));
}

TaylorModel build_cos() {
  std::vector<Rational> c(TaylorModel::kMaxDeg + 1, Rational(0));
  Rational fact(1);  // (2k)!
  for (int k = 0; 2 * k <= TaylorModel::kMaxDeg; ++k) {
    if (k > 0)
      for (int j = 2 * k - 1; j <= 2 * k; ++j) fact *= Rational(j);
    Rational term = Rational(1) / fact;
    if (k % 2 == 1) term = -term;
    c[static_cast<std::size_t>(2 * k)] = term;
  }
  Rational tfact(1);
  for (int j = 2; j <= TaylorModel::kMaxDeg + 2; ++j) tfact *= Rational(j);
  Interval trem = Interval::from_rational(Rational(1) / tfact);
  TaylorModel t = TaylorModel::from_coeffs(std::move(c));
  return t + TaylorModel::remainder_only(TaylorModel::kMaxDeg + 2,
                                         Interval(-trem.hi(), trem.hi()));
}

}  // namespace

const TaylorModel& TaylorModel::sinc() {
  static const TaylorModel t = build_sinc();
  return t;
}
const TaylorModel& TaylorModel::cosine() {
  static const TaylorModel t = build_cos();
  return t;
}
const TaylorModel& TaylorModel::recip_sinc() {
  static const TaylorModel t = sinc().reciprocal();
  return t;
}
const TaylorModel& TaylorModel::recip_sinc2() {
  static const TaylorModel t = recip_sinc() * recip_sinc();
  return t;
}
const TaylorModel& TaylorModel::r_cot_r() {
  static const TaylorModel t = cosine() * recip_sinc();
  return t;
}

FrozenTM::FrozenTM(const TaylorModel& tm) : rem_(tm.rem()) {
  int v = tm.vanish_order();
  shift_ = std::min(v, tm.rem_pow());
  rem_shift_ = tm.rem_pow() - shift_;
  const auto& c = tm.coeffs();
  for (std::size_t i = static_cast<std::size_t>(shift_); i < c.size(); ++i)
    co_.push_back(Interval::from_rational(c[i]));
}

Interval FrozenTM::eval(const Interval& x) const {
  if (x.lo() < 0.0 || x.hi() > 0.125)
    throw std::domain_error("FrozenTM: argument outside [0, r_switch]");
  Interval acc(0.0);
  for (std::size_t i = co_.size(); i-- > 0;) acc = acc * x + co_[i];
  if (!(rem_.lo() == 0 && rem_.hi() == 0))
    acc += x.pow_int(static_cast<unsigned>(rem_shift_)) * rem_;
  if (shift_ == 0) return acc;
  return x.pow_int(static_cast<unsigned>(shift_)) * acc;
}

}  // namespace hemicert
