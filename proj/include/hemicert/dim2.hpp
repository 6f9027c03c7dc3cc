#pragma once

#include <string>
#include <vector>

#include "hemicert/conformal.hpp"
#include "hemicert/interval.hpp"
#include "hemicert/radial_env.hpp"
#include "hemicert/verdict.hpp"

namespace hemicert {

enum class CoeffVariant { Eq, Appendix };  // r^10 coefficient 74/429925 vs 74/429975

/// The n = 2 configuration: the degree-10 polynomial F, a = 0.400001, k = 1.
struct Dim2Config {
  CoeffVariant variant = CoeffVariant::Eq;
  ConformalFactor cf;
  Interval C{1.0};  // enclosure of the unnormalized F(pi/2)

  struct RowQ {
    Interval q3, q6, q10, q12, q14, q17;  // normalized row quantities
  };
  RowQ row(const Interval& r) const;
};

Dim2Config build_F2(CoeffVariant variant = CoeffVariant::Eq);
/// build_F2 with a different scale constant a (falsification tests).
Dim2Config build_F2_with_a(CoeffVariant variant, const Rational& a);

/// Bound value p + q·C on the unnormalized scale (all paper bounds are
/// rational multiples of C; the one exact lower bound 1/C is p = 1).
struct QBoundValue {
  bool present = false;
  Rational p, q;
  Interval value(const Interval& C) const;
};

enum class QRoute {
  Bisect,          // adaptive interval bisection (Taylor models near 0)
  MonotoneViaFd,   // Ḟ >= 0  ->  F nondecreasing
  MonotoneViaQ5,   // Q5 >= 0 ->  F/sin²r nondecreasing
  MonotoneViaQ16,  // Q16 <= 0 -> Ḟcot r nonincreasing
};

struct QBoundSpec {
  int index = 0;  // 1..18
  std::vector<std::pair<Rational, RadialEnv::Tag>> expr;  // unnormalized Q
  QBoundValue lower, upper;
  QRoute lower_route = QRoute::Bisect;
  QRoute upper_route = QRoute::Bisect;
};

/// The 18 bounds of the appendix lemma, in order.
const std::vector<QBoundSpec>& qbound_specs();
/// The section-4.1.4 variant of (vi) with the lower bound relaxed to 0.41.
QBoundSpec qbound_spec_vi_tightened();

struct QBoundCertificate {
  int index = 0;
  Verdict verdict = Verdict::Inconclusive;
  Interval hull{0.0};  // certified enclosure of the normalized quantity
  long leaves = 0;
  int depth_used = 0;
  std::string notes;
  double witness_r = -1.0;  // for FALSIFIED
  double seconds = 0.0;
};

QBoundCertificate certify_qbound(const Dim2Config& cfg, const QBoundSpec& spec,
                                 int max_depth = 40);

/// Certified range hulls of the normalized quantities over [0, pi/2]
/// (uniform sweep; feeds the derivative-bound arithmetic).
struct QHulls {
  Interval q3, q4, q5, q6, q9, q10, q11, q12, q13, q14, q15, q16, q17, q18;
  Interval lap;   // Δf + 4f over the whole domain
  Interval dlap;  // ∂_r(Δf + 4f)
};
QHulls certified_hulls(const Dim2Config& cfg, int cells = 512);

/// |Δf + 4f| <= 3.1 and |∂_r(Δf + 4f)| <= 7.2 via the convex-combination
/// argument on the certified hulls.
struct LapBoundsCertificate {
  Interval lap_range, dlap_range;
  Verdict verdict = Verdict::Inconclusive;
};
LapBoundsCertificate certify_lap_bounds(const QHulls& h, const Interval& four_a);

/// E1 < 0 and E2 < 0 on [0, pi/2] x [0, pi], two routes: the paper's
/// convex-combination bound (using min; the paper prints max) and a direct
/// interval certification.
struct E1E2Certificate {
  Verdict verdict = Verdict::Inconclusive;
  double margin_e1 = 0.0, margin_e2 = 0.0;  // convex route margins
  Verdict direct_e1 = Verdict::Inconclusive;
  Verdict direct_e2 = Verdict::Inconclusive;
  bool paper_max_vs_min_flag = true;  // the paper writes max where min is meant
};
E1E2Certificate certify_E1_E2(const Dim2Config& cfg);
E1E2Certificate certify_E1_E2_with_bounds(const Interval& four_a, const Interval& q6_lo,
                                          const Interval& q7_lo, const Interval& q8_lo);

/// Certified sup |∂_s D| and sup |∂_r D| from the appendix's displayed
/// expressions, with the s-trig factors treated as intervals.
struct DerivativeBounds {
  double bound_s = 0.0, bound_r = 0.0;
  double lip_euclidean = 0.0;
  Verdict verdict = Verdict::Inconclusive;  // PASS iff <= 80 and <= 202
};
DerivativeBounds d_derivative_bounds(const QHulls& h, const Interval& four_a);

/// D in the appendix's (sigma = sin² s) form; float64 midpoint evaluation.
double d_point(double four_a, const Dim2Config::RowQ& q, double sigma);
Interval d_interval(const Interval& four_a, const Dim2Config::RowQ& q,
                    const Interval& sigma);

/// Lipschitz grid certification of D >= 0 on [0, pi/2]^2.
struct GridCertificate {
  double delta = 0.0;
  int workers = 0;
  double grid_min = 0.0;
  long argmin_i = -1, argmin_j = -1;
  double argmin_r = 0.0, argmin_s = 0.0;
  unsigned long long evaluations = 0;
  double bound_s = 0.0, bound_r = 0.0, lip_euclidean = 0.0;
  double covering_radius = 0.0;
  double eps_eval = 0.0;
  double margin = 0.0;                     // grid_min - lip_eucl*covering - eps
  double margin_paper_mirror = 0.0;        // grid_min - 202·δ/√2 - eps
  double margin_componentwise_paper = 0.0; // grid_min - (80+202)·δ/2 - eps
  Verdict verdict = Verdict::Inconclusive;
  double seconds = 0.0;
};

GridCertificate grid_certify(const Dim2Config& cfg, double delta, int workers,
                             const DerivativeBounds& db);
/// Serial reference implementation (same arithmetic, plain loop); returns
/// the same grid_min/argmin fields bit-for-bit.
GridCertificate grid_certify_serial_reference(const Dim2Config& cfg, double delta,
                                              const DerivativeBounds& db);

/// Adaptive interval branch-and-bound proof of D > 0; the independent
/// second certifier. `offset` shifts D (falsification tests).
struct BranchBoundCertificate {
  Verdict verdict = Verdict::Inconclusive;
  unsigned long long boxes = 0;
  unsigned long long budget = 0;
  double min_enclosure_lo = 0.0;
  double witness_r = -1.0, witness_s = -1.0;
  double seconds = 0.0;
};
BranchBoundCertificate branch_bound_certify(const Dim2Config& cfg,
                                            unsigned long long box_budget = 2'000'000,
                                            double offset = 0.0);

}  // namespace hemicert
