#pragma once

#include <string>

#include "hemicert/interval.hpp"
#include "hemicert/rational.hpp"
#include "hemicert/verdict.hpp"

namespace hemicert {

/// The printed proposition states 2m-1 >= 8k/pi²; its own derivation in the
/// text requires (2m-1) > pi²k/2 (the printed fraction is inverted, and the
/// printed choice (n,k,m) = (3,4,3) genuinely fails D >= 0 at r = s = pi/2).
/// Both conventions are implemented; Corrected is what makes the chain sound.
enum class PiCondition { Printed, Corrected };

struct ParamChoice {
  int n = 0, k = 0, m = 0;
  bool degree_condition = false;   // 2m-1 >= 2(n-1)
  bool pi_sq_condition = false;    // per the chosen convention
  bool ratio_condition = false;    // (2m-1)²/(2m(2k+2m-1)) > (n-1)/(n+2k-2)
  PiCondition convention = PiCondition::Printed;
  bool conditions_met() const {
    return degree_condition && pi_sq_condition && ratio_condition;
  }
};

/// Checks the three sufficient conditions for a given (n, k, m); the pi²
/// comparison is certified through an interval enclosure of pi².
ParamChoice check_params(int n, int k, int m, PiCondition convention);

/// Least m meeting all three conditions. Throws std::domain_error when
/// k <= n/(n-2) (exact rational comparison; the mu_n sign would fail).
ParamChoice find_m(int n, int k, PiCondition convention = PiCondition::Printed);

/// L = (Δf + 2nf)/(r^(2m-2) sin^(2k) s) for f = -r^(2m) sin^(2k) s, split as
/// L = L0(r) - lambda(r)·cot²s with lambda >= 0.
struct LValue {
  Interval L0;
  Interval lambda;
};
LValue l_value(int n, int k, int m, const Interval& r);

/// Interval certification of E1 < 0, E2 < 0 (via L0 < 0) and D >= 0 (via the
/// quadratic-in-cot²s coefficients d0, d1, d2 >= 0) on (0, pi/2] x (0, pi).
struct ChainCertificate {
  ParamChoice pc;
  Verdict e1 = Verdict::Inconclusive;
  Verdict e2 = Verdict::Inconclusive;
  Verdict d = Verdict::Inconclusive;
  Verdict overall = Verdict::Inconclusive;
  long leaves = 0;
  double witness_r = -1.0, witness_s = -1.0;  // for FALSIFIED d
  std::string notes;
  double seconds = 0.0;
};

ChainCertificate verify_chain(const ParamChoice& pc, int subdivision);
ChainCertificate verify_chain(int n, int k, int m, int subdivision,
                              PiCondition convention = PiCondition::Printed);

}  // namespace hemicert
