#include "hemicert/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hemicert {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_double_exact(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("Rational: non-finite double");
  return Rational(mpq_class(d));  // mpq_class(double) is the exact binary value
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class v(s);
    v.canonicalize();
    return Rational(v);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class v(s);
    v.canonicalize();
    return Rational(v);
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits.erase(digits.begin());
  }
  if (digits.empty()) throw std::invalid_argument("Rational: bad literal " + s);
  mpz_class num(digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  mpq_class v(neg ? -num : num, den);
  v.canonicalize();
  return Rational(v);
}

Rational Rational::pow(unsigned e) const {
  Rational out(1);
  Rational base = *this;
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

double Rational::double_below() const {
  double d = v_.get_d();  // truncated toward zero, within 1 ulp
  // Walk down until d <= value, then up while the next double still fits.
  while (Rational::from_double_exact(d) > *this)
    d = std::nextafter(d, -std::numeric_limits<double>::infinity());
  for (;;) {
    double up = std::nextafter(d, std::numeric_limits<double>::infinity());
    if (Rational::from_double_exact(up) <= *this)
      d = up;
    else
      break;
  }
  return d;
}

double Rational::double_above() const {
  double d = v_.get_d();
  while (Rational::from_double_exact(d) < *this)
    d = std::nextafter(d, std::numeric_limits<double>::infinity());
  for (;;) {
    double dn = std::nextafter(d, -std::numeric_limits<double>::infinity());
    if (Rational::from_double_exact(dn) >= *this)
      d = dn;
    else
      break;
  }
  return d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace hemicert
