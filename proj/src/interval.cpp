#include "hemicert/interval.hpp"

#include <cstdio>

namespace hemicert {

Interval pi_interval() {
  // 0x1.921fb54442d18p+1 is the largest double below pi.
  double lo = 0x1.921fb54442d18p+1;
  return Interval(lo, detail::next_up(lo));
}

Interval pi_half_interval() {
  double lo = 0x1.921fb54442d18p+0;
  return Interval(lo, detail::next_up(lo));
}

std::string Interval::str() const {
  char buf[80];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo_, hi_);
  return buf;
}

}  // namespace hemicert
