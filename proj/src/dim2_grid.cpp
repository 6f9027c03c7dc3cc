#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "hemicert/dim2.hpp"
#include "hemicert/trig.hpp"

namespace hemicert {

namespace {

double wall_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

// The appendix's sigma-form of D. The same expression tree is instantiated
// for double (grid midpoints), Interval (branch and bound), and the rounding
// audit below, so the analysed graph is the executed graph.
template <class T>
T d_formula(const T& four_a, const T& q3, const T& q6, const T& q10, const T& q12,
            const T& q14, const T& q17, const T& sig) {
  T om = T(1.0) - sig;
  T p1 = four_a - q12 * sig - T(4.0) * q6 * om;
  T p2 = four_a - q10 * sig - T(6.0) * q6 * om;
  T tm = q3 * sig * (T(2.0) * q6 * (T(1.0) - T(2.0) * sig) + q17 * sig);
  T u = T(4.0) * (q14 * q14) * sig * om;
  return p1 * p2 + tm - u;
}

// Range-and-error tracker: `range` encloses the true value, `err` bounds
// |computed double - true value| over all inputs in range, assuming inputs
// carry their own err. Every error-arithmetic step rounds up.
struct ErrVal {
  Interval range;
  double err;
  explicit ErrVal(double c) : range(c), err(0.0) {}
  ErrVal(const Interval& r, double e) : range(r), err(e) {}
};

constexpr double kEps = 2.220446049250313e-16;  // 2^-52

ErrVal operator+(const ErrVal& a, const ErrVal& b) {
  using namespace detail;
  Interval r = a.range + b.range;
  double m = add_up(add_up(r.mag(), a.err), b.err);
  double rnd = mul_up(kEps, m);
  return {r, add_up(add_up(a.err, b.err), rnd)};
}
ErrVal operator-(const ErrVal& a, const ErrVal& b) {
  using namespace detail;
  Interval r = a.range - b.range;
  double m = add_up(add_up(r.mag(), a.err), b.err);
  double rnd = mul_up(kEps, m);
  return {r, add_up(add_up(a.err, b.err), rnd)};
}
ErrVal operator*(const ErrVal& a, const ErrVal& b) {
  using namespace detail;
  Interval r = a.range * b.range;
  double ma = add_up(a.range.mag(), a.err), mb = add_up(b.range.mag(), b.err);
  double prop = add_up(mul_up(a.err, mb), mul_up(b.err, a.range.mag()));
  double rnd = mul_up(kEps, mul_up(ma, mb));
  return {r, add_up(prop, rnd)};
}

struct RowMid {
  double q3, q6, q10, q12, q14, q17;
};

double halfwidth(const Interval& v) { return 0.5 * v.width() + 4.0 * kEps * v.mag(); }

}  // namespace

double d_point(double four_a, const Dim2Config::RowQ& q, double sigma) {
  return d_formula<double>(four_a, q.q3.mid(), q.q6.mid(), q.q10.mid(), q.q12.mid(),
                           q.q14.mid(), q.q17.mid(), sigma);
}

Interval d_interval(const Interval& four_a, const Dim2Config::RowQ& q,
                    const Interval& sigma) {
  // sigma-Horner form (quadratic in sigma) to limit the dependency blowup:
  // D = a0 + a1 σ + a2 σ², with
  //   a0 = α1 α2, α1 = 4a - 4Q6, α2 = 4a - 6Q6
  //   a1 = α1 β2 + α2 β1 + 2Q3 Q6 - 4Q14², β1 = 4Q6 - Q12, β2 = 6Q6 - Q10
  //   a2 = β1 β2 + Q3(Q17 - 4Q6) + 4Q14²
  Interval al1 = four_a - 4.0 * q.q6;
  Interval al2 = four_a - 6.0 * q.q6;
  Interval be1 = 4.0 * q.q6 - q.q12;
  Interval be2 = 6.0 * q.q6 - q.q10;
  Interval q14sq = q.q14.square();
  Interval a0 = al1 * al2;
  Interval a1 = al1 * be2 + al2 * be1 + 2.0 * q.q3 * q.q6 - 4.0 * q14sq;
  Interval a2 = be1 * be2 + q.q3 * (q.q17 - 4.0 * q.q6) + 4.0 * q14sq;
  return (a2 * sigma + a1) * sigma + a0;
}

namespace {

struct GridData {
  std::vector<double> sigma;      // sin² s_j midpoints
  double sigma_err;               // max halfwidth
  std::vector<double> coord;      // clipped grid coordinates i·δ
  long n;                         // last index
};

GridData grid_coordinates(double delta) {
  GridData g;
  double top = pi_half_interval().lo();
  g.n = static_cast<long>(std::ceil(top / delta));
  g.coord.resize(static_cast<std::size_t>(g.n) + 1);
  g.sigma.resize(static_cast<std::size_t>(g.n) + 1);
  g.sigma_err = 0.0;
  for (long j = 0; j <= g.n; ++j) {
    double s = std::min(static_cast<double>(j) * delta, top);
    g.coord[static_cast<std::size_t>(j)] = s;
    Interval sig = sin_series(Interval(s)).square();
    g.sigma[static_cast<std::size_t>(j)] = sig.mid();
    g.sigma_err = std::max(g.sigma_err, halfwidth(sig));
  }
  return g;
}

struct RowBest {
  double value;
  long j;
};

struct EpsInputs {
  QHulls hulls;
  double q_err;  // max halfwidth over row quantities
  double sigma_err;
  double four_a_err;
};

double eps_eval_bound(const EpsInputs& in, const Interval& four_a) {
  auto seed = [](const Interval& hull, double err) { return ErrVal(hull, err); };
  ErrVal fa(four_a, in.four_a_err);
  ErrVal q3 = seed(in.hulls.q3, in.q_err), q6 = seed(in.hulls.q6, in.q_err),
         q10 = seed(in.hulls.q10, in.q_err), q12 = seed(in.hulls.q12, in.q_err),
         q14 = seed(in.hulls.q14, in.q_err), q17 = seed(in.hulls.q17, in.q_err);
  ErrVal sig(Interval(0.0, 1.0), in.sigma_err);
  return d_formula<ErrVal>(fa, q3, q6, q10, q12, q14, q17, sig).err;
}

GridCertificate grid_run(const Dim2Config& cfg, double delta, int workers,
                         const DerivativeBounds& db, bool parallel) {
  double t0 = wall_seconds();
  GridCertificate gc;
  gc.delta = delta;
  gc.workers = parallel ? (workers > 0 ? workers : omp_get_max_threads()) : 1;
  gc.bound_s = db.bound_s;
  gc.bound_r = db.bound_r;
  gc.lip_euclidean = db.lip_euclidean;

  GridData g = grid_coordinates(delta);
  const long n = g.n;
  Interval four_a_iv = Interval::from_rational(Rational(4) * cfg.cf.a);
  const double four_a = four_a_iv.mid();

  std::vector<RowBest> best(static_cast<std::size_t>(n) + 1);
  std::vector<double> row_err(static_cast<std::size_t>(n) + 1, 0.0);

  auto process_row = [&](long i) {
    double r = g.coord[static_cast<std::size_t>(i)];
    Dim2Config::RowQ rq = cfg.row(Interval(r));
    RowMid m{rq.q3.mid(), rq.q6.mid(), rq.q10.mid(),
             rq.q12.mid(), rq.q14.mid(), rq.q17.mid()};
    row_err[static_cast<std::size_t>(i)] =
        std::max({halfwidth(rq.q3), halfwidth(rq.q6), halfwidth(rq.q10),
                  halfwidth(rq.q12), halfwidth(rq.q14), halfwidth(rq.q17)});
    double bv = std::numeric_limits<double>::infinity();
    long bj = -1;
    const double* sig = g.sigma.data();
    for (long j = 0; j <= n; ++j) {
      double d = d_formula<double>(four_a, m.q3, m.q6, m.q10, m.q12, m.q14, m.q17, sig[j]);
      if (d < bv) {
        bv = d;
        bj = j;
      }
    }
    best[static_cast<std::size_t>(i)] = {bv, bj};
  };

  if (parallel) {
    int nw = gc.workers;
#pragma omp parallel for schedule(static) num_threads(nw)
    for (long i = 0; i <= n; ++i) process_row(i);
  } else {
    for (long i = 0; i <= n; ++i) process_row(i);
  }

  long bi = 0;
  for (long i = 1; i <= n; ++i)
    if (best[static_cast<std::size_t>(i)].value < best[static_cast<std::size_t>(bi)].value) bi = i;
  gc.grid_min = best[static_cast<std::size_t>(bi)].value;
  gc.argmin_i = bi;
  gc.argmin_j = best[static_cast<std::size_t>(bi)].j;
  gc.argmin_r = g.coord[static_cast<std::size_t>(bi)];
  gc.argmin_s = g.coord[static_cast<std::size_t>(gc.argmin_j)];
  gc.evaluations =
      (static_cast<unsigned long long>(n) + 1) * (static_cast<unsigned long long>(n) + 1);

  double q_err = 0.0;
  for (double e : row_err) q_err = std::max(q_err, e);
  EpsInputs ei{certified_hulls(cfg), q_err + kEps, g.sigma_err + kEps,
               halfwidth(four_a_iv)};
  gc.eps_eval = eps_eval_bound(ei, four_a_iv);

  using namespace detail;
  gc.covering_radius = mul_up(delta, 0.7071067811865477);
  gc.margin = sub_down(sub_down(gc.grid_min, mul_up(gc.lip_euclidean, gc.covering_radius)),
                       gc.eps_eval);
  gc.margin_paper_mirror =
      sub_down(sub_down(gc.grid_min, mul_up(202.0, gc.covering_radius)), gc.eps_eval);
  gc.margin_componentwise_paper = sub_down(
      sub_down(gc.grid_min, mul_up(0.5 * (80.0 + 202.0), delta)), gc.eps_eval);

  if (gc.grid_min <= 0.0)
    gc.verdict = Verdict::Falsified;
  else if (gc.margin > 0.0)
    gc.verdict = Verdict::Certified;
  else
    gc.verdict = Verdict::Inconclusive;
  gc.seconds = wall_seconds() - t0;
  return gc;
}

}  // namespace

GridCertificate grid_certify(const Dim2Config& cfg, double delta, int workers,
                             const DerivativeBounds& db) {
  return grid_run(cfg, delta, workers, db, /*parallel=*/true);
}

GridCertificate grid_certify_serial_reference(const Dim2Config& cfg, double delta,
                                              const DerivativeBounds& db) {
  return grid_run(cfg, delta, 1, db, /*parallel=*/false);
}

BranchBoundCertificate branch_bound_certify(const Dim2Config& cfg,
                                            unsigned long long box_budget,
                                            double offset) {
  double t0 = wall_seconds();
  BranchBoundCertificate bb;
  bb.budget = box_budget;
  bb.min_enclosure_lo = std::numeric_limits<double>::infinity();
  Interval four_a = Interval::from_rational(Rational(4) * cfg.cf.a);
  Interval off(offset);

  struct Box {
    double rlo, rhi, slo, shi;
  };
  double top = pi_half_interval().hi();
  std::vector<Box> stack{{0.0, top, 0.0, top}};
  while (!stack.empty()) {
    if (bb.boxes >= box_budget) {
      bb.verdict = Verdict::Inconclusive;
      bb.seconds = wall_seconds() - t0;
      return bb;
    }
    Box b = stack.back();
    stack.pop_back();
    ++bb.boxes;
    Interval r(b.rlo, b.rhi), s(b.slo, b.shi);
    Interval sig = sin2_enclosure(s);
    Dim2Config::RowQ rq = cfg.row(r);
    Interval d = d_interval(four_a, rq, sig) + off;
    if (d.lo() > 0.0) {
      bb.min_enclosure_lo = std::min(bb.min_enclosure_lo, d.lo());
      continue;
    }
    if (d.hi() < 0.0) {
      bb.verdict = Verdict::Falsified;
      bb.witness_r = 0.5 * (b.rlo + b.rhi);
      bb.witness_s = 0.5 * (b.slo + b.shi);
      bb.seconds = wall_seconds() - t0;
      return bb;
    }
    double rw = b.rhi - b.rlo, sw = b.shi - b.slo;
    if (rw >= sw) {
      double m = 0.5 * (b.rlo + b.rhi);
      if (b.rlo < 0.125 && b.rhi > 0.125 && rw < 0.5) m = 0.125;
      stack.push_back({b.rlo, m, b.slo, b.shi});
      stack.push_back({m, b.rhi, b.slo, b.shi});
    } else {
      double m = 0.5 * (b.slo + b.shi);
      stack.push_back({b.rlo, b.rhi, b.slo, m});
      stack.push_back({b.rlo, b.rhi, m, b.shi});
    }
  }
  bb.verdict = Verdict::Certified;
  bb.seconds = wall_seconds() - t0;
  return bb;
}

}  // namespace hemicert
