#include <chrono>
#include <nlohmann/json.hpp>
#include <sstream>

#include "conebvp/config.hpp"

namespace conebvp {

using nlohmann::json;

namespace {

constexpr const char* kToolName = "conebvp";
constexpr const char* kToolVersion = "0.1.0";

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

// Envelope with the config's I1 override applied; m1 is re-extracted when
// the interval moves.
Envelope resolve_envelope(const ProblemConfig& cfg) {
  Envelope env = envelope_closed_form(cfg.problem_id());
  if (auto ov = cfg.I1()) {
    env.I1 = *ov;
    double m1 = std::numeric_limits<double>::infinity();
    const int n = 2048;
    for (int i = 0; i <= n; ++i) {
      double t = ov->lo + ov->width() * i / n;
      m1 = std::min(m1, env.k1(t));
    }
    double t_star = golden_min(env.k1, ov->lo, ov->hi, 1e-12);
    env.m1 = std::min(m1, env.k1(t_star));
  }
  return env;
}

std::vector<HypothesisReport> run_checks(const ProblemConfig& cfg,
                                         const Nonlinearity& f,
                                         const ConeConstants& c,
                                         bool* limits_ok) {
  CheckOptions opts;
  opts.use_paper_bounds = cfg.paper_bounds;
  *limits_ok = true;
  switch (cfg.theorem_id()) {
    case TheoremId::Thm2:
      return {check_H1(f, c, cfg.p_value(), opts),
              check_H2(f, c, cfg.q_value(), opts)};
    case TheoremId::Thm3: {
      LimitRatios lr = limit_ratios(f, c.I1);
      *limits_ok = lr.f0_minus.diverged && lr.finf_minus.diverged;
      return {check_H1_star(f, c, cfg.p_value(), opts)};
    }
    case TheoremId::Thm4: {
      LimitRatios lr = limit_ratios(f, c.I1);
      *limits_ok = lr.f0_plus.vanishes && lr.finf_plus.vanishes;
      return {check_H2_star(f, c, cfg.q_value(), opts)};
    }
    case TheoremId::Thm5:
      return check_thm5(f, c, cfg.p_value(), cfg.q_value(), cfg.r_value(),
                        opts);
    case TheoremId::Thm6:
      return check_thm6(f, c, cfg.p_value(), cfg.q_value(), cfg.r_value(),
                        opts);
  }
  return {};
}

}  // namespace

RunReport run_hypothesis_pipeline(const ProblemConfig& cfg) {
  RunReport rep;
  rep.config = cfg;
  double t0 = now_ms();
  rep.envelope = resolve_envelope(cfg);
  rep.constants = cone_constants(rep.envelope, 1e-13);
  rep.constants_used = cfg.paper_bounds
                           ? paper_bound_constants(rep.envelope, rep.constants)
                           : rep.constants;
  rep.timing_ms["constants"] = now_ms() - t0;

  t0 = now_ms();
  Nonlinearity f = cfg.nonlinearity();
  bool limits_ok = true;
  rep.hypotheses = run_checks(cfg, f, rep.constants_used, &limits_ok);
  rep.hypotheses_pass = limits_ok;
  for (const auto& h : rep.hypotheses) rep.hypotheses_pass &= h.pass;
  rep.timing_ms["hypotheses"] = now_ms() - t0;
  return rep;
}

RunReport run_solve_pipeline(const ProblemConfig& cfg) {
  RunReport rep = run_hypothesis_pipeline(cfg);
  double t0 = now_ms();

  GreenKernel kernel(cfg.problem_id());
  std::vector<double> splits = {rep.envelope.I1.lo, rep.envelope.I1.hi};
  splits.insert(splits.end(), rep.envelope.kinks.begin(),
                rep.envelope.kinks.end());
  Discretization d = discretize(kernel, cfg.N, splits);

  double p = cfg.p_value(), q = cfg.q_value(), r = cfg.r_value();
  double lo = p > 0 ? p : (q > 0 ? q : 1.0);
  double hi = std::max({p, q, r, 1.0});
  std::vector<double> seeds = default_seed_schedule(lo, hi, cfg.seeds);

  SolveOptions sopts;
  sopts.N = cfg.N;
  sopts.tol = cfg.tol;
  Nonlinearity f = cfg.nonlinearity();
  rep.solutions = find_fixed_points(d, rep.envelope, f, seeds, sopts,
                                    &rep.no_convergence_seeds);
  rep.timing_ms["solve"] = now_ms() - t0;

  t0 = now_ms();
  rep.certificate = certify(rep.solutions, p, q, r, cfg.theorem_id());
  rep.timing_ms["certify"] = now_ms() - t0;
  return rep;
}

namespace {

json hypothesis_to_json(const HypothesisReport& h) {
  json j;
  j["id"] = to_string(h.id);
  j["pass"] = h.pass;
  j["margin"] = num(h.margin);
  j["witness"] = {{"t", num(h.t_witness)}, {"u", num(h.u_witness)}};
  if (h.p > 0) j["p"] = h.p;
  if (h.q > 0) j["q"] = h.q;
  if (h.r > 0) j["r"] = h.r;
  j["coefficient"] = num(h.coefficient);
  switch (h.strictness) {
    case Strictness::None: j["strictness"] = "none"; break;
    case Strictness::AtValue: j["strictness"] = "at-value"; break;
    case Strictness::Everywhere: j["strictness"] = "everywhere"; break;
  }
  if (h.strictness != Strictness::None) {
    j["strict_pass"] = h.strict_pass;
    j["strict_margin"] = num(h.strict_margin);
  }
  j["t_range"] = {num(h.t_range.lo), num(h.t_range.hi)};
  j["u_range"] = {num(h.u_range.lo), num(h.u_range.hi)};
  return j;
}

json constants_to_json(const ConeConstants& c) {
  json j;
  j["intPhi"] = num(c.intPhi);
  j["intPhiI1"] = num(c.intPhiI1);
  j["intK1PhiI1"] = num(c.intK1PhiI1);
  j["cH1"] = num(c.cH1);
  j["cH2"] = num(c.cH2);
  j["cThm5i"] = num(c.cThm5i);
  j["ratio"] = num(c.ratio);
  j["K1"] = num(c.K1);
  j["K2"] = num(c.K2);
  j["m1"] = num(c.m1);
  j["I1"] = {num(c.I1.lo), num(c.I1.hi)};
  return j;
}

json certificate_to_json(const MultiplicityCertificate& cert) {
  json j;
  j["theorem"] = to_string(cert.theorem);
  j["pass"] = cert.pass;
  j["ambiguous_assignment"] = cert.ambiguous_assignment;
  if (!cert.failure.empty()) j["failure"] = cert.failure;
  json slots = json::array();
  for (const auto& s : cert.slots) {
    json sj;
    sj["name"] = s.name;
    sj["filled"] = s.filled;
    if (s.filled) {
      sj["solution"] = s.solution_index;
      sj["margin"] = num(s.margin);
    }
    slots.push_back(sj);
  }
  j["slots"] = slots;
  return j;
}

}  // namespace

std::string report_to_json_text(const RunReport& rep, int indent) {
  json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["config"] = json::parse(rep.config.to_json_text());
  j["constants"] = constants_to_json(rep.constants);
  if (rep.config.paper_bounds)
    j["constants_used"] = constants_to_json(rep.constants_used);
  json hyp = json::array();
  for (const auto& h : rep.hypotheses) hyp.push_back(hypothesis_to_json(h));
  j["hypotheses"] = hyp;
  j["hypotheses_pass"] = rep.hypotheses_pass;
  if (!rep.solutions.empty() || rep.certificate) {
    json sols = json::array();
    for (size_t i = 0; i < rep.solutions.size(); ++i) {
      const BvpSolution& s = rep.solutions[i];
      json sj;
      sj["index"] = i;
      sj["gamma"] = num(s.gamma);
      sj["theta"] = num(s.theta);
      sj["alpha"] = num(s.alpha);
      sj["fixed_point_residual"] = num(s.fixed_point_residual);
      sj["ode_residual"] = num(s.ode_residual);
      sj["cone_margin"] = num(s.cone_margin);
      sj["nodes"] = s.mesh->size();
      sj["seed_amplitude"] = num(s.seed_amplitude);
      sols.push_back(sj);
    }
    j["solutions"] = sols;
    if (!rep.no_convergence_seeds.empty()) {
      json ns = json::array();
      for (double a : rep.no_convergence_seeds) ns.push_back(a);
      j["no_convergence_seeds"] = ns;
    }
  }
  if (rep.certificate) j["certificate"] = certificate_to_json(*rep.certificate);
  json t;
  for (const auto& [k, v] : rep.timing_ms) t[k] = v;
  j["timing_ms"] = t;
  return j.dump(indent);
}

std::string envelope_csv(const ProblemConfig& cfg, int grid) {
  ProblemId pid = cfg.problem_id();
  GreenKernel kernel(pid);
  NormalizedKernel nk(kernel);
  Envelope env = resolve_envelope(cfg);
  std::ostringstream out;
  out.precision(17);
  out << "t,s,u_tilde,k1,k2\n";
  for (int i = 0; i < grid; ++i) {
    double t = pid.a + (pid.b - pid.a) * (i + 1) / (grid + 1);
    double k1t = env.k1(t), k2t = env.k2(t);
    for (int jj = 0; jj < grid; ++jj) {
      double s = pid.a + (pid.b - pid.a) * jj / (grid - 1);
      out << t << ',' << s << ',' << nk.value(t, s) << ',' << k1t << ','
          << k2t << '\n';
    }
  }
  return out.str();
}

std::string solution_csv(const BvpSolution& sol) {
  std::ostringstream out;
  out.precision(17);
  out << "t,u\n";
  for (int i = 0; i < sol.mesh->size(); ++i)
    out << sol.mesh->nodes[static_cast<size_t>(i)] << ','
        << sol.values[static_cast<size_t>(i)] << '\n';
  return out.str();
}

}  // namespace conebvp
