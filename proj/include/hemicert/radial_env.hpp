#pragma once

#include <array>

#include "hemicert/interval.hpp"
#include "hemicert/radial_poly.hpp"
#include "hemicert/taylor_model.hpp"
#include "hemicert/trig.hpp"

namespace hemicert {

/// The removable-singularity composites of F that the certification needs,
/// each evaluated rigorously anywhere on [0, pi/2]: a factored Taylor model
/// handles [0, r_switch], monotone trig enclosures handle the rest, and a
/// straddling interval is split and hulled. All quantities are for the
/// *unnormalized* F (rational coefficients); callers apply the 1/C scale.
class RadialEnv {
 public:
  enum Tag {
    kF = 0,        // F
    kFd,           // Ḟ
    kFdd,          // F̈
    kFddd,         // F⃛
    kFOverSin2,    // F / sin²r
    kFdCot,        // Ḟ cot r
    kQ14,          // (Ḟ − F cot r)/sin r
    kQ5,           // (Ḟ − 2F cot r)/sin²r
    kQ15,          // (F̈ − 2Ḟ cot r − F + 2F/sin²r)/sin r
    kQ16,          // F̈ cot r − Ḟ/sin²r
    kQ18,          // F⃛ + 2F̈ cot r + 4Ḟ − 4Ḟ/sin²r + 4F cot r/sin²r
    kTagCount
  };

  /// F must be even with F(0) = 0 (zero constant coefficient).
  explicit RadialEnv(const RadialPoly& F);

  /// Certified enclosure of the tagged composite over x ⊆ [0, pi/2].
  Interval eval(Tag tag, const Interval& x) const;

  /// Taylor-model-only evaluation, x ⊆ [0, r_switch] required.
  Interval eval_taylor(Tag tag, const Interval& x) const;
  /// Direct evaluation, x.lo > 0 required.
  Interval eval_direct(Tag tag, const Interval& x) const;

  /// The underlying Taylor model of a tag (for difference constructions).
  const TaylorModel& taylor(Tag tag) const { return tmodel_[tag]; }

  /// The core quantities evaluated together over one interval, sharing the
  /// trig primitives (the grid rows and branch-and-bound hot path).
  struct Core {
    Interval F, Fd, Fdd, f_over_sin2, fd_cot, q14;
  };
  Core eval_core(const Interval& x) const;

  const RadialPoly& F() const { return F_; }
  const RadialPoly& Fd() const { return Fd_; }
  const RadialPoly& Fdd() const { return Fdd_; }
  const RadialPoly& Fddd() const { return Fddd_; }

 private:
  RadialPoly F_, Fd_, Fdd_, Fddd_;
  std::array<TaylorModel, kTagCount> tmodel_;
  std::array<FrozenTM, kTagCount> tm_;
};

}  // namespace hemicert
