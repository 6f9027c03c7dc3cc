#pragma once

#include "hemicert/interval.hpp"

namespace hemicert {

/// Certified trigonometric enclosures on the closed domains the
/// certification needs ([0, pi/2] for r, [0, pi] for s). Point values come
/// from Taylor series with a rigorous tail bound; interval arguments use
/// monotonicity on the given subdomain.

/// sin over any x with |x| <= 3.3 (series, valid for thin or fat input,
/// but tight only for thin input).
Interval sin_series(const Interval& x);
/// cos over any x with |x| <= 3.3.
Interval cos_series(const Interval& x);

/// sin over x ⊆ [0, pi]; splits at pi/2 where sin turns around.
Interval sin_enclosure(const Interval& x);
/// cos over x ⊆ [0, pi] (monotone decreasing).
Interval cos_enclosure(const Interval& x);
/// sin^2 over x ⊆ [0, pi].
Interval sin2_enclosure(const Interval& x);
/// sin(x)cos(x) = sin(2x)/2 over x ⊆ [0, pi].
Interval sincos_enclosure(const Interval& x);
/// cot over x ⊆ (0, pi), monotone decreasing; requires x.lo > 0, x.hi < pi.
Interval cot_enclosure(const Interval& x);
/// 1/sin^2 over x ⊆ (0, pi/2], monotone decreasing; requires x.lo > 0.
Interval csc2_enclosure(const Interval& x);
/// x*cot(x) over x ⊆ [0, pi/2] (monotone decreasing, value 1 at 0).
Interval xcotx_enclosure(const Interval& x);
/// x^2/sin^2(x) over x ⊆ [0, pi/2] (monotone increasing, value 1 at 0).
Interval x2_over_sin2_enclosure(const Interval& x);

/// The elementary-expression tags of the numeric core.
enum class TrigExpr { Sin, Cos, Sin2, XCotX, X2OverSin2, InvSin2, Cot };

/// Certified enclosure of the tagged expression over x. Throws
/// std::domain_error when x leaves the expression's domain (for the pole
/// cases) or the supported range.
Interval interval_env(TrigExpr expr, const Interval& x);

}  // namespace hemicert
