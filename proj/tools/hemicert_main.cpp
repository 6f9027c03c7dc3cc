#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hemicert/conformal.hpp"
#include "hemicert/dim2.hpp"
#include "hemicert/highdim.hpp"
#include "hemicert/jacobi.hpp"
#include "hemicert/report.hpp"
#include "hemicert/spectral.hpp"

namespace {

using namespace hemicert;

constexpr int kExitIoError = 3;

struct CommonOpts {
  std::string out_path;
  std::string format = "json";
  std::string config_path;
};

// plain key=value config file; flags override
std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  if (path.empty()) return kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

int emit_report(Report& rep, Verdict overall, const CommonOpts& opts) {
  rep.set_overall(overall);
  std::string text = opts.format == "markdown" ? rep.to_markdown() : rep.to_json();
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.out_path);
    if (!out) {
      std::cerr << "error: cannot open output path " << opts.out_path << "\n";
      return kExitIoError;
    }
    out << text;
    if (!out) {
      std::cerr << "error: write failed for " << opts.out_path << "\n";
      return kExitIoError;
    }
  }
  return exit_code_for(overall);
}

Json environment_json(int workers) {
  Json env;
  env["precision"] = "float64";
  env["workers_requested"] = workers;
  env["omp_max_threads"] = omp_get_max_threads();
  return env;
}

Json grid_json(const GridCertificate& gc) {
  Json j;
  j["delta"] = real_str(gc.delta);
  j["workers"] = gc.workers;
  j["grid_min"] = real_str(gc.grid_min);
  j["argmin_i"] = gc.argmin_i;
  j["argmin_j"] = gc.argmin_j;
  j["argmin_r"] = real_str(gc.argmin_r);
  j["argmin_s"] = real_str(gc.argmin_s);
  j["evaluations"] = gc.evaluations;
  j["lip_bound_s"] = real_str(gc.bound_s);
  j["lip_bound_r"] = real_str(gc.bound_r);
  j["lip_euclidean"] = real_str(gc.lip_euclidean);
  j["covering_radius"] = real_str(gc.covering_radius);
  j["eps_eval"] = real_str(gc.eps_eval);
  j["margin"] = real_str(gc.margin);
  j["margin_paper_mirror_202"] = real_str(gc.margin_paper_mirror);
  j["margin_componentwise_80_202"] = real_str(gc.margin_componentwise_paper);
  j["verdict"] = verdict_name(gc.verdict);
  j["seconds"] = real_str(gc.seconds);
  return j;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Falsified || b == Verdict::Falsified) return Verdict::Falsified;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive)
    return Verdict::Inconclusive;
  return Verdict::Certified;
}

struct JacobiOutcome {
  Verdict verdict;
  Json json;
};

// Jacobi correction + final positivity: the composite first-order mean
// curvature must vanish as an exact CosPoly, and the second-fundamental-form
// integral must be strictly positive.
JacobiOutcome run_jacobi_stage(int n, int k, const Interval& c) {
  JacobiOutcome out{Verdict::Certified, Json()};
  JacobiSolution js = solve_jacobi(n, k, c);
  // conformal part: (n/2)·c·psi has shape -(n/2)(1-c²)^k (times c);
  // diffeomorphism part: -(Δ̂+n)v = +(n/2)(1-c²)^k (times c).
  CosPoly conf = CosPoly::sin2k(static_cast<unsigned>(k)).scaled(Rational(-n, 2));
  CosPoly diffeo = h_prime_diffeo(js.shape, n).scaled(js.prefactor_rational_part());
  bool cancels = (conf + diffeo).is_zero();
  // A'_11 identity: (cot s ∂_s - ∂_s²)(shape) = 2k(2k-1)(1-c²)^k
  CosPoly a11 = js.shape.cot_ds() - js.shape.ds2();
  bool a11_ok = a11 == CosPoly::sin2k(static_cast<unsigned>(k))
                           .scaled(Rational(2L * k * (2 * k - 1)));
  SffIntegral sff = sff_integral(n, k, c);
  bool positive = sff.value.lo() > 0.0;
  // solvability gate: the forcing is orthogonal to the first eigenspace
  bool gate = sphere_mean(CosPoly::c() * CosPoly::sin2k(static_cast<unsigned>(k)), n)
                  .is_zero();
  if (!(cancels && a11_ok && positive && gate)) out.verdict = Verdict::Falsified;
  out.json["mean_curvature_cancellation_exact"] = cancels;
  out.json["a11_identity_exact"] = a11_ok;
  out.json["forcing_orthogonal_to_kernel"] = gate;
  out.json["sff_integral_rational_part"] = sff.rational_part.str();
  out.json["sff_integral"] = real_str(sff.value.mid());
  out.json["sff_integral_positive"] = positive;
  out.json["verdict"] = verdict_name(out.verdict);
  return out;
}

int cmd_certify_n2(double delta, int workers, const std::string& variant_name,
                   bool with_branch_bound, const CommonOpts& opts) {
  CoeffVariant variant =
      variant_name == "appendix" ? CoeffVariant::Appendix : CoeffVariant::Eq;
  Dim2Config cfg = build_F2(variant);

  Report rep;
  rep.doc["command"] = "certify-n2";
  Json conf;
  conf["n"] = 2;
  conf["k"] = 1;
  conf["a"] = cfg.cf.a.str();
  conf["coefficient_variant"] = variant_name;
  conf["C"] = real_str(cfg.C.mid());
  conf["c_Fdot_pi_half"] = real_str(cfg.cf.c.mid());
  rep.doc["configuration"] = conf;
  rep.doc["environment"] = environment_json(workers);

  Verdict overall = Verdict::Certified;

  Json qlist = Json::array();
  for (const auto& spec : qbound_specs()) {
    QBoundCertificate qc = certify_qbound(cfg, spec);
    Json q;
    q["index"] = qc.index;
    q["verdict"] = verdict_name(qc.verdict);
    q["hull_lo"] = real_str(qc.hull.lo());
    q["hull_hi"] = real_str(qc.hull.hi());
    q["leaves"] = qc.leaves;
    q["depth"] = qc.depth_used;
    if (!qc.notes.empty()) q["notes"] = qc.notes;
    q["seconds"] = real_str(qc.seconds);
    qlist.push_back(q);
    overall = combine(overall, qc.verdict);
  }
  rep.doc["q_bounds"] = qlist;

  QHulls hulls = certified_hulls(cfg);
  Interval four_a = Interval::from_rational(Rational(4) * cfg.cf.a);
  LapBoundsCertificate lb = certify_lap_bounds(hulls, four_a);
  Json lap;
  lap["lap_range"] = lb.lap_range.str();
  lap["dlap_range"] = lb.dlap_range.str();
  lap["verdict"] = verdict_name(lb.verdict);
  rep.doc["laplacian_bounds"] = lap;
  overall = combine(overall, lb.verdict);

  E1E2Certificate ec = certify_E1_E2(cfg);
  Json e12;
  e12["margin_e1"] = real_str(ec.margin_e1);
  e12["margin_e2"] = real_str(ec.margin_e2);
  e12["direct_e1"] = verdict_name(ec.direct_e1);
  e12["direct_e2"] = verdict_name(ec.direct_e2);
  e12["paper_writes_max_where_min_is_meant"] = ec.paper_max_vs_min_flag;
  e12["verdict"] = verdict_name(ec.verdict);
  rep.doc["e1_e2"] = e12;
  overall = combine(overall, ec.verdict);

  DerivativeBounds db = d_derivative_bounds(hulls, four_a);
  Json dj;
  dj["bound_s"] = real_str(db.bound_s);
  dj["bound_r"] = real_str(db.bound_r);
  dj["lip_euclidean"] = real_str(db.lip_euclidean);
  dj["paper_bounds"] = "|d_s D| <= 80, |d_r D| <= 202";
  dj["verdict"] = verdict_name(db.verdict);
  rep.doc["derivative_bounds"] = dj;
  overall = combine(overall, db.verdict);

  GridCertificate gc = grid_certify(cfg, delta, workers, db);
  rep.doc["grid_certificate"] = grid_json(gc);
  overall = combine(overall, gc.verdict);

  if (with_branch_bound) {
    BranchBoundCertificate bb = branch_bound_certify(cfg);
    Json bj;
    bj["verdict"] = verdict_name(bb.verdict);
    bj["boxes"] = bb.boxes;
    bj["budget"] = bb.budget;
    bj["min_enclosure_lo"] = real_str(bb.min_enclosure_lo);
    bj["seconds"] = real_str(bb.seconds);
    rep.doc["branch_and_bound"] = bj;
    overall = combine(overall, bb.verdict);
  }

  SpectralVariation sv = mu_values(2, 1, cfg.cf.a, Rational(1));
  Json sj;
  sj["mu_n"] = sv.mu_n.str();
  sj["mu_common"] = sv.mu_common.str();
  sj["mu_sum"] = sv.mu_sum.str();
  bool signs = sign_pattern_check(sv) == SignVerdict::Pass;
  sj["sign_pattern"] = signs ? "PASS" : "FAIL";
  if (sv.mu_n.sign() < 0) {
    Rational eps_max = Rational(-2) * sv.mu_n / Rational(2);  // 2|mu_n|/n, n = 2
    sj["admissible_epsilon_range"] = "(0, " + eps_max.str() + ")";
  }
  rep.doc["spectral"] = sj;
  overall = combine(overall, signs ? Verdict::Certified : Verdict::Falsified);

  JacobiOutcome jo = run_jacobi_stage(2, 1, cfg.cf.c);
  rep.doc["jacobi"] = jo.json;
  overall = combine(overall, jo.verdict);

  return emit_report(rep, overall, opts);
}

int cmd_certify_general(int n, int k, int m, int subdivision,
                        const std::string& pi_condition, const CommonOpts& opts) {
  Report rep;
  rep.doc["command"] = "certify-general";
  PiCondition conv =
      pi_condition == "printed" ? PiCondition::Printed : PiCondition::Corrected;

  Json conf;
  conf["n"] = n;
  conf["k"] = k;
  conf["pi_condition"] = pi_condition;
  conf["subdivision"] = subdivision;
  rep.doc["environment"] = environment_json(0);

  ParamChoice pc;
  try {
    pc = m > 0 ? check_params(n, k, m, conv) : find_m(n, k, conv);
  } catch (const std::domain_error& e) {
    conf["precondition_error"] = e.what();
    rep.doc["configuration"] = conf;
    return emit_report(rep, Verdict::Falsified, opts);
  }
  conf["m"] = pc.m;
  conf["degree_condition"] = pc.degree_condition;
  conf["pi_sq_condition"] = pc.pi_sq_condition;
  conf["ratio_condition"] = pc.ratio_condition;
  rep.doc["configuration"] = conf;

  Verdict overall = Verdict::Certified;

  ChainCertificate cc = verify_chain(pc, subdivision);
  Json cj;
  cj["e1"] = verdict_name(cc.e1);
  cj["e2"] = verdict_name(cc.e2);
  cj["d"] = verdict_name(cc.d);
  cj["leaves"] = cc.leaves;
  if (!cc.notes.empty()) cj["notes"] = cc.notes;
  if (cc.overall == Verdict::Falsified && cc.witness_r >= 0.0) {
    cj["witness_r"] = real_str(cc.witness_r);
    cj["witness_s"] = real_str(cc.witness_s);
  }
  cj["verdict"] = verdict_name(cc.overall);
  rep.doc["chain"] = cj;
  overall = combine(overall, cc.overall);

  // sign pattern: mu is linear in b > 0, so b = 1 carries the signs of the
  // actual b = (pi/2)^(2m).
  SpectralVariation sv = mu_values(n, k, Rational(0), Rational(1));
  Json sj;
  sj["mu_n_at_b1"] = sv.mu_n.str();
  sj["mu_common_at_b1"] = sv.mu_common.str();
  bool signs = sign_pattern_check(sv) == SignVerdict::Pass;
  sj["sign_pattern"] = signs ? "PASS" : "FAIL";
  rep.doc["spectral"] = sj;
  overall = combine(overall, signs ? Verdict::Certified : Verdict::Falsified);

  ConformalFactor cf = ConformalFactor::monomial(n, k, pc.m);
  JacobiOutcome jo = run_jacobi_stage(n, k, cf.c);
  rep.doc["jacobi"] = jo.json;
  overall = combine(overall, jo.verdict);

  return emit_report(rep, overall, opts);
}

int cmd_spectral(int n, int k, const std::string& a_str, const std::string& b_str,
                 const CommonOpts& opts) {
  Rational a = Rational::parse(a_str), b = Rational::parse(b_str);
  SpectralVariation sv = mu_values(n, k, a, b);
  Report rep;
  rep.doc["command"] = "spectral";
  Json conf;
  conf["n"] = n;
  conf["k"] = k;
  conf["a"] = a.str();
  conf["b"] = b.str();
  rep.doc["configuration"] = conf;
  Json sj;
  sj["mu_n"] = sv.mu_n.str();
  sj["mu_common"] = sv.mu_common.str();
  sj["mu_sum"] = sv.mu_sum.str();
  sj["mu_n_decimal"] = real_str(sv.mu_n.to_double());
  sj["mu_common_decimal"] = real_str(sv.mu_common.to_double());
  double mu_quad = mu_n_from_corollary_quadrature(n, k, a.to_double(), b.to_double());
  sj["mu_n_quadrature"] = real_str(mu_quad);
  sj["mu_n_quadrature_delta"] = real_str(std::abs(mu_quad - sv.mu_n.to_double()));
  bool signs = sign_pattern_check(sv) == SignVerdict::Pass;
  sj["sign_pattern"] = signs ? "PASS" : "FAIL";
  if (sv.mu_n.sign() < 0) {
    Rational eps_max = Rational(2) * sv.mu_n.abs() / Rational(n);
    sj["admissible_epsilon_range"] = "(0, " + eps_max.str() + ")";
  }
  rep.doc["spectral"] = sj;
  rep.doc["environment"] = environment_json(0);
  return emit_report(rep, signs ? Verdict::Certified : Verdict::Falsified, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hemicert: machine certification of the hemisphere deformation bounds"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--config", opts.config_path, "plain key=value config file");

  auto* n2 = app.add_subcommand("certify-n2", "run the full n = 2 certification");
  double delta = 1e-4;
  int workers = 0;
  std::string variant = "eq";
  bool with_bb = false;
  n2->add_option("--delta", delta, "grid spacing (default 1e-4)");
  n2->add_option("--workers", workers, "worker threads (0 = all)");
  n2->add_option("--coefficient-variant", variant, "eq | appendix")
      ->check(CLI::IsMember({"eq", "appendix"}));
  n2->add_flag("--branch-bound", with_bb, "also run the branch-and-bound certifier");
  n2->add_option("--out", opts.out_path, "report output path");
  n2->add_option("--format", opts.format, "json | markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  auto* gen = app.add_subcommand("certify-general", "run the n >= 3 certification");
  int gn = 3, gk = 4, gm = 0, subdivision = 2000;
  std::string pi_condition = "corrected";
  gen->add_option("--n", gn, "dimension n >= 3")->required();
  gen->add_option("--k", gk, "exponent k")->required();
  gen->add_option("--m", gm, "monomial power m (0 = pick least admissible)");
  gen->add_option("--subdivision", subdivision, "radial subdivision (default 2000)");
  gen->add_option("--pi-condition", pi_condition,
                  "printed (paper text, unsound) | corrected (default)")
      ->check(CLI::IsMember({"printed", "corrected"}));
  gen->add_option("--out", opts.out_path, "report output path");
  gen->add_option("--format", opts.format, "json | markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  auto* sp = app.add_subcommand("spectral", "exact first-order eigenvalue variations");
  int sn = 2, sk = 1;
  std::string a_str = "0", b_str = "1";
  sp->add_option("--n", sn)->required();
  sp->add_option("--k", sk)->required();
  sp->add_option("--a", a_str, "scale constant (exact decimal or p/q)");
  sp->add_option("--b", b_str, "boundary amplitude (exact decimal or p/q)");
  sp->add_option("--out", opts.out_path, "report output path");
  sp->add_option("--format", opts.format, "json | markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  CLI11_PARSE(app, argc, argv);

  try {
    auto kv = load_config(opts.config_path);
    auto cfg_get = [&](const char* key, auto& target) {
      auto it = kv.find(key);
      if (it == kv.end()) return;
      std::istringstream ss(it->second);
      ss >> target;
    };
    if (n2->count("--delta") == 0) cfg_get("delta", delta);
    if (n2->count("--workers") == 0) cfg_get("workers", workers);
    if (n2->count("--coefficient-variant") == 0) cfg_get("coefficient-variant", variant);
    if (gen->count("--subdivision") == 0) cfg_get("subdivision", subdivision);
    if (const char* we = std::getenv("WORKERS"); we && *we) workers = std::atoi(we);

    if (*n2) return cmd_certify_n2(delta, workers, variant, with_bb, opts);
    if (*gen) return cmd_certify_general(gn, gk, gm, subdivision, pi_condition, opts);
    if (*sp) return cmd_spectral(sn, sk, a_str, b_str, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitIoError;
}
