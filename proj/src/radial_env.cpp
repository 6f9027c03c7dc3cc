#include "hemicert/radial_env.hpp"

#include <stdexcept>

namespace hemicert {

RadialEnv::RadialEnv(const RadialPoly& F) : F_(F) {
  if (F.parity() != Parity::Even || (!F.coeffs().empty() && !F.coeffs()[0].is_zero()))
    throw std::invalid_argument("RadialEnv: F must be even with F(0) = 0");
  Fd_ = F_.derivative();
  Fdd_ = Fd_.derivative();
  Fddd_ = Fdd_.derivative();

  const TaylorModel F_tm = F_.to_taylor_model();
  const TaylorModel Fd_tm = Fd_.to_taylor_model();
  const TaylorModel Fdd_tm = Fdd_.to_taylor_model();
  const TaylorModel Fddd_tm = Fddd_.to_taylor_model();
  const TaylorModel F_r2 = F_tm.shifted_down(2);    // F/r²
  const TaylorModel Fd_r = Fd_tm.shifted_down(1);   // Ḟ/r
  const TaylorModel& rcot = TaylorModel::r_cot_r();
  const TaylorModel& R1 = TaylorModel::recip_sinc();
  const TaylorModel& R2 = TaylorModel::recip_sinc2();

  // F/sin²r = (F/r²)·(r²/sin²r)
  TaylorModel q6 = F_r2 * R2;
  // Ḟ cot r = (Ḟ/r)·(r cot r)
  TaylorModel q17 = Fd_r * rcot;
  // (Ḟ − F cot r)/sin r = [Ḟ/r − (F/r²)(r cot r)] / sinc
  TaylorModel q14 = (Fd_r - F_r2 * rcot) * R1;
  // (Ḟ − 2F cot r)/sin²r = ([Ḟ/r − 2(F/r²)(r cot r)] / r)·(r²/sin²r)
  TaylorModel q5 = (Fd_r - F_r2.scaled(Rational(2)) * rcot).shifted_down(1) * R2;
  // (F̈ − 2Ḟcot r − F + 2F/sin²r)/sin r = (N/r)·(1/sinc), N vanishing at 0
  TaylorModel N15 =
      Fdd_tm - Fd_r.scaled(Rational(2)) * rcot - F_tm + F_r2.scaled(Rational(2)) * R2;
  TaylorModel q15 = N15.shifted_down(1) * R1;
  // F̈cot r − Ḟ/sin²r = [F̈(r cot r) − (Ḟ/r)(r²/sin²r)] / r
  TaylorModel q16 = (Fdd_tm * rcot - Fd_r * R2).shifted_down(1);
  // F⃛ + 2F̈cot r + 4Ḟ − 4Ḟ/sin²r + 4F cot r/sin²r
  //   = F⃛ + 4Ḟ + [2F̈(r cot r) − 4(Ḟ/r)(r²/sin²r) + 4(F/r²)(r cot r)(r²/sin²r)]/r
  TaylorModel N18 = Fdd_tm.scaled(Rational(2)) * rcot -
                    Fd_r.scaled(Rational(4)) * R2 +
                    F_r2.scaled(Rational(4)) * rcot * R2;
  TaylorModel q18 = Fddd_tm + Fd_tm.scaled(Rational(4)) + N18.shifted_down(1);

  tmodel_[kF] = F_tm;
  tmodel_[kFd] = Fd_tm;
  tmodel_[kFdd] = Fdd_tm;
  tmodel_[kFddd] = Fddd_tm;
  tmodel_[kFOverSin2] = q6;
  tmodel_[kFdCot] = q17;
  tmodel_[kQ14] = q14;
  tmodel_[kQ5] = q5;
  tmodel_[kQ15] = q15;
  tmodel_[kQ16] = q16;
  tmodel_[kQ18] = q18;
  for (int t = 0; t < kTagCount; ++t)
    tm_[static_cast<std::size_t>(t)] = FrozenTM(tmodel_[static_cast<std::size_t>(t)]);
}

Interval RadialEnv::eval_taylor(Tag tag, const Interval& x) const {
  return tm_[tag].eval(x);
}

Interval RadialEnv::eval_direct(Tag tag, const Interval& x) const {
  if (x.lo() <= 0.0)
    throw std::domain_error("RadialEnv: direct evaluation needs x.lo > 0");
  switch (tag) {
    case kF: return F_.eval_interval(x);
    case kFd: return Fd_.eval_interval(x);
    case kFdd: return Fdd_.eval_interval(x);
    case kFddd: return Fddd_.eval_interval(x);
    default: break;
  }
  Interval F = F_.eval_interval(x), Fd = Fd_.eval_interval(x);
  Interval cot = cot_enclosure(x), csc2 = csc2_enclosure(x);
  switch (tag) {
    case kFOverSin2:
      return F * csc2;
    case kFdCot:
      return Fd * cot;
    case kQ14:
      return (Fd - F * cot) / sin_enclosure(x);
    case kQ5:
      return (Fd - 2.0 * F * cot) * csc2;
    case kQ15:
      return (Fdd_.eval_interval(x) - 2.0 * Fd * cot - F + 2.0 * F * csc2) /
             sin_enclosure(x);
    case kQ16:
      return Fdd_.eval_interval(x) * cot - Fd * csc2;
    case kQ18:
      return Fddd_.eval_interval(x) + 2.0 * Fdd_.eval_interval(x) * cot + 4.0 * Fd -
             4.0 * Fd * csc2 + 4.0 * F * cot * csc2;
    default:
      throw std::logic_error("RadialEnv: unknown tag");
  }
}

Interval RadialEnv::eval(Tag tag, const Interval& x) const {
  const double rs = 0.125;
  if (x.lo() < 0.0 || x.hi() > pi_half_interval().hi())
    throw std::domain_error("RadialEnv: argument outside [0, pi/2]");
  if (x.hi() <= rs) return eval_taylor(tag, x);
  if (x.lo() >= rs) return eval_direct(tag, x);
  Interval left = eval_taylor(tag, Interval(x.lo(), rs));
  Interval right = eval_direct(tag, Interval(rs, x.hi()));
  return Interval::hull2(left, right);
}

RadialEnv::Core RadialEnv::eval_core(const Interval& x) const {
  const double rs = 0.125;
  if (x.hi() <= rs) {
    return Core{tm_[kF].eval(x),         tm_[kFd].eval(x),    tm_[kFdd].eval(x),
                tm_[kFOverSin2].eval(x), tm_[kFdCot].eval(x), tm_[kQ14].eval(x)};
  }
  if (x.lo() >= rs) {
    Interval sn = sin_enclosure(x);
    Interval cs = cos_enclosure(x);
    Interval cot = cs / sn;
    Interval csc2 = (Interval(1.0) / sn).square();
    Core c{F_.eval_interval(x), Fd_.eval_interval(x), Fdd_.eval_interval(x),
           Interval(0.0),       Interval(0.0),        Interval(0.0)};
    c.f_over_sin2 = c.F * csc2;
    c.fd_cot = c.Fd * cot;
    c.q14 = (c.Fd - c.F * cot) / sn;
    return c;
  }
  Core a = eval_core(Interval(x.lo(), rs));
  Core b = eval_core(Interval(rs, x.hi()));
  return Core{Interval::hull2(a.F, b.F),
              Interval::hull2(a.Fd, b.Fd),
              Interval::hull2(a.Fdd, b.Fdd),
              Interval::hull2(a.f_over_sin2, b.f_over_sin2),
              Interval::hull2(a.fd_cot, b.fd_cot),
              Interval::hull2(a.q14, b.q14)};
}

}  // namespace hemicert
