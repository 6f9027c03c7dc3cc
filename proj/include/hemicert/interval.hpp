#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hemicert/rational.hpp"

namespace hemicert {

namespace detail {

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Knuth two-sum: s = fl(a+b), err such that a+b = s+err exactly (finite case).
inline double two_sum_err(double a, double b, double s) {
  double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

inline double add_down(double a, double b) {
  double s = a + b;
  double e = two_sum_err(a, b, s);
  return e < 0 ? next_down(s) : s;
}
inline double add_up(double a, double b) {
  double s = a + b;
  double e = two_sum_err(a, b, s);
  return e > 0 ? next_up(s) : s;
}
inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

// p = fl(a*b); fma gives the exact residual, so the nudge fires only when
// the product was inexact. Keeps exact zeros exact.
inline double mul_down(double a, double b) {
  double p = a * b;
  double e = std::fma(a, b, -p);
  return e < 0 ? next_down(p) : p;
}
inline double mul_up(double a, double b) {
  double p = a * b;
  double e = std::fma(a, b, -p);
  return e > 0 ? next_up(p) : p;
}

// q = fl(a/b), b != 0. a/b - q = -r/b with r = fma(q,b,-a) exact.
inline double div_down(double a, double b) {
  double q = a / b;
  double r = std::fma(q, b, -a);
  if ((r > 0 && b > 0) || (r < 0 && b < 0)) return next_down(q);
  return q;
}
inline double div_up(double a, double b) {
  double q = a / b;
  double r = std::fma(q, b, -a);
  if ((r < 0 && b > 0) || (r > 0 && b < 0)) return next_up(q);
  return q;
}

inline double sqrt_down(double a) {
  double s = std::sqrt(a);
  double r = std::fma(s, s, -a);
  return r > 0 ? next_down(s) : s;
}
inline double sqrt_up(double a) {
  double s = std::sqrt(a);
  double r = std::fma(s, s, -a);
  return r < 0 ? next_up(s) : s;
}

}  // namespace detail

/// Closed real interval [lo, hi] with outward-rounded float64 endpoints.
/// Every arithmetic operation encloses the exact result: the rounded
/// endpoint is nudged one ulp outward exactly when it was inexact.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  explicit Interval(double v) : lo_(v), hi_(v) { check(); }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) { check(); }

  static Interval hull2(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
  }
  static Interval from_rational(const Rational& r) {
    return Interval(r.double_below(), r.double_above());
  }
  static Interval from_rationals(const Rational& lo, const Rational& hi) {
    return Interval(lo.double_below(), hi.double_above());
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double width() const { return hi_ - lo_; }
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Rational& r) const {
    return Rational::from_double_exact(lo_) <= r && r <= Rational::from_double_exact(hi_);
  }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
  bool subset_of(const Interval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }
  bool overlaps(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool is_positive() const { return lo_ > 0.0; }
  bool is_negative() const { return hi_ < 0.0; }
  bool strictly_less_than(double c) const { return hi_ < c; }

  Interval operator-() const { return Interval(-hi_, -lo_); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(detail::add_down(a.lo_, b.lo_), detail::add_up(a.hi_, b.hi_));
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(detail::sub_down(a.lo_, b.hi_), detail::sub_up(a.hi_, b.lo_));
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    using namespace detail;
    double lo = std::min(std::min(mul_down(a.lo_, b.lo_), mul_down(a.lo_, b.hi_)),
                         std::min(mul_down(a.hi_, b.lo_), mul_down(a.hi_, b.hi_)));
    double hi = std::max(std::max(mul_up(a.lo_, b.lo_), mul_up(a.lo_, b.hi_)),
                         std::max(mul_up(a.hi_, b.lo_), mul_up(a.hi_, b.hi_)));
    return Interval(lo, hi);
  }
  /// Division; the divisor must not contain zero.
  friend Interval operator/(const Interval& a, const Interval& b) {
    using namespace detail;
    if (b.contains_zero())
      throw std::domain_error("Interval: division by interval containing zero");
    double lo = std::min(std::min(div_down(a.lo_, b.lo_), div_down(a.lo_, b.hi_)),
                         std::min(div_down(a.hi_, b.lo_), div_down(a.hi_, b.hi_)));
    double hi = std::max(std::max(div_up(a.lo_, b.lo_), div_up(a.lo_, b.hi_)),
                         std::max(div_up(a.hi_, b.lo_), div_up(a.hi_, b.hi_)));
    return Interval(lo, hi);
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  friend Interval operator+(const Interval& a, double b) { return a + Interval(b); }
  friend Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
  friend Interval operator-(const Interval& a, double b) { return a - Interval(b); }
  friend Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
  friend Interval operator*(const Interval& a, double b) { return a * Interval(b); }
  friend Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
  friend Interval operator/(const Interval& a, double b) { return a / Interval(b); }
  friend Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

  /// x^2, tight at zero.
  Interval square() const {
    if (lo_ >= 0)
      return Interval(detail::mul_down(lo_, lo_), detail::mul_up(hi_, hi_));
    if (hi_ <= 0)
      return Interval(detail::mul_down(hi_, hi_), detail::mul_up(lo_, lo_));
    double m = std::max(detail::mul_up(lo_, lo_), detail::mul_up(hi_, hi_));
    return Interval(0.0, m);
  }

  /// Integer power via monotonicity (tight for the even/odd cases we use).
  Interval pow_int(unsigned n) const {
    if (n == 0) return Interval(1.0);
    if (n == 1) return *this;
    if (n % 2 == 0) {
      Interval h = pow_int(n / 2);
      return h.square();
    }
    Interval h = pow_int(n - 1);
    // odd n: x^n monotone increasing
    Interval p = *this * h;
    if (lo_ >= 0 || hi_ <= 0) return p;
    return p;  // straddling zero: plain product already encloses
  }

  /// sqrt for nonnegative intervals.
  Interval sqrt() const {
    if (lo_ < 0) throw std::domain_error("Interval: sqrt of negative interval");
    return Interval(detail::sqrt_down(lo_), detail::sqrt_up(hi_));
  }

  Interval intersect(const Interval& o) const {
    double lo = std::max(lo_, o.lo_), hi = std::min(hi_, o.hi_);
    if (lo > hi) throw std::domain_error("Interval: empty intersection");
    return Interval(lo, hi);
  }

  /// |x| as an interval.
  Interval abs() const {
    if (lo_ >= 0) return *this;
    if (hi_ <= 0) return -*this;
    return Interval(0.0, mag());
  }

  std::string str() const;

 private:
  void check() const {
    if (!(lo_ <= hi_) || !std::isfinite(lo_) || !std::isfinite(hi_))
      throw std::invalid_argument("Interval: invalid endpoints [" + std::to_string(lo_) +
                                  ", " + std::to_string(hi_) + "]");
  }
  double lo_, hi_;
};

/// pi and pi/2 as 1-ulp enclosures.
Interval pi_interval();
Interval pi_half_interval();

}  // namespace hemicert
