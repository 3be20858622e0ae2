#include "conebvp/config.hpp"

#include <nlohmann/json.hpp>

namespace conebvp {

using nlohmann::json;

double eval_constant(const std::string& expr) {
  return Expression::parse(expr).eval(0.0, 0.0);
}

ProblemId ProblemConfig::problem_id() const {
  ProblemId pid;
  pid.order = n;
  pid.left_multiplicity = k;
  if (!drift.empty()) pid.drift = eval_constant(drift);
  pid.validate();
  return pid;
}

Nonlinearity ProblemConfig::nonlinearity() const {
  std::vector<NonlinearityBranch> bs;
  for (size_t i = 0; i < branches.size(); ++i) {
    NonlinearityBranch b{std::numeric_limits<double>::infinity(),
                         Expression::parse(branches[i].expr)};
    if (!branches[i].u_max.empty()) b.u_upper = eval_constant(branches[i].u_max);
    bs.push_back(std::move(b));
  }
  ProblemId pid = problem_id();
  return Nonlinearity(std::move(bs), Interval{pid.a, pid.b});
}

TheoremId ProblemConfig::theorem_id() const {
  if (theorem == "thm2") return TheoremId::Thm2;
  if (theorem == "thm3") return TheoremId::Thm3;
  if (theorem == "thm4") return TheoremId::Thm4;
  if (theorem == "thm5") return TheoremId::Thm5;
  if (theorem == "thm6") return TheoremId::Thm6;
  throw ConfigError("config field 'theorem': unknown value '" + theorem +
                    "' (expected thm2..thm6)");
}

double ProblemConfig::p_value() const {
  return p.empty() ? 0.0 : eval_constant(p);
}
double ProblemConfig::q_value() const {
  return q.empty() ? 0.0 : eval_constant(q);
}
double ProblemConfig::r_value() const {
  return r.empty() ? 0.0 : eval_constant(r);
}

std::optional<Interval> ProblemConfig::I1() const {
  if (!I1_override) return std::nullopt;
  return Interval{eval_constant((*I1_override)[0]),
                  eval_constant((*I1_override)[1])};
}

namespace {

std::string field_string(const json& j, const char* name, bool required,
                         std::string def = {}) {
  if (!j.contains(name)) {
    if (required) throw ConfigError(std::string("config field '") + name +
                                    "': missing");
    return def;
  }
  const json& v = j.at(name);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) {
    // numbers are accepted wherever expressions are
    json num = v;
    return num.dump();
  }
  throw ConfigError(std::string("config field '") + name +
                    "': expected string or number");
}

}  // namespace

ProblemConfig ProblemConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: not valid JSON: ") + e.what());
  }
  ProblemConfig cfg;
  if (!j.contains("problem") || !j["problem"].is_object())
    throw ConfigError("config field 'problem': missing object");
  const json& pj = j["problem"];
  if (!pj.contains("n") || !pj["n"].is_number_integer())
    throw ConfigError("config field 'problem.n': expected integer");
  if (!pj.contains("k") || !pj["k"].is_number_integer())
    throw ConfigError("config field 'problem.k': expected integer");
  cfg.n = pj["n"].get<int>();
  cfg.k = pj["k"].get<int>();
  cfg.drift = field_string(pj, "B", false);

  if (j.contains("I1")) {
    const json& i1 = j["I1"];
    if (!i1.is_array() || i1.size() != 2)
      throw ConfigError("config field 'I1': expected [a1, b1]");
    std::array<std::string, 2> ov;
    for (int i = 0; i < 2; ++i) {
      if (i1[static_cast<size_t>(i)].is_string())
        ov[static_cast<size_t>(i)] = i1[static_cast<size_t>(i)].get<std::string>();
      else if (i1[static_cast<size_t>(i)].is_number())
        ov[static_cast<size_t>(i)] = i1[static_cast<size_t>(i)].dump();
      else
        throw ConfigError("config field 'I1': entries must be numbers or expressions");
    }
    cfg.I1_override = ov;
  }

  if (!j.contains("nonlinearity") || !j["nonlinearity"].is_object() ||
      !j["nonlinearity"].contains("branches"))
    throw ConfigError("config field 'nonlinearity.branches': missing");
  const json& bj = j["nonlinearity"]["branches"];
  if (!bj.is_array() || bj.empty())
    throw ConfigError("config field 'nonlinearity.branches': expected non-empty array");
  for (const json& b : bj) {
    BranchSpec spec;
    spec.expr = field_string(b, "expr", true);
    spec.u_max = field_string(b, "u_max", false);
    cfg.branches.push_back(std::move(spec));
  }
  for (size_t i = 0; i + 1 < cfg.branches.size(); ++i)
    if (cfg.branches[i].u_max.empty())
      throw ConfigError("config field 'nonlinearity.branches': only the last "
                        "branch may omit u_max");

  if (j.contains("thresholds")) {
    const json& tj = j["thresholds"];
    cfg.p = field_string(tj, "p", false);
    cfg.q = field_string(tj, "q", false);
    cfg.r = field_string(tj, "r", false);
  }
  if (j.contains("theorem")) {
    if (!j["theorem"].is_string())
      throw ConfigError("config field 'theorem': expected string");
    cfg.theorem = j["theorem"].get<std::string>();
  }
  if (j.contains("solver")) {
    const json& sj = j["solver"];
    if (sj.contains("N")) {
      if (!sj["N"].is_number_integer())
        throw ConfigError("config field 'solver.N': expected integer");
      cfg.N = sj["N"].get<int>();
    }
    if (sj.contains("tol")) {
      if (!sj["tol"].is_number())
        throw ConfigError("config field 'solver.tol': expected number");
      cfg.tol = sj["tol"].get<double>();
    }
    if (sj.contains("seeds")) {
      if (!sj["seeds"].is_number_integer())
        throw ConfigError("config field 'solver.seeds': expected integer");
      cfg.seeds = sj["seeds"].get<int>();
    }
  }
  if (j.contains("paper_bounds")) {
    if (!j["paper_bounds"].is_boolean())
      throw ConfigError("config field 'paper_bounds': expected boolean");
    cfg.paper_bounds = j["paper_bounds"].get<bool>();
  }

  // validate the derived objects now so errors surface with field names
  try {
    cfg.problem_id();
  } catch (const UnsupportedProblem& e) {
    throw ConfigError(std::string("config field 'problem': ") + e.what());
  }
  try {
    cfg.nonlinearity();
  } catch (const ParseError& e) {
    throw ConfigError(std::string("config field 'nonlinearity': ") + e.what());
  }
  cfg.theorem_id();
  return cfg;
}

namespace {

json config_to_json(const ProblemConfig& cfg) {
  json j;
  j["problem"]["n"] = cfg.n;
  j["problem"]["k"] = cfg.k;
  if (!cfg.drift.empty()) j["problem"]["B"] = cfg.drift;
  if (cfg.I1_override)
    j["I1"] = {(*cfg.I1_override)[0], (*cfg.I1_override)[1]};
  json branches = json::array();
  for (const auto& b : cfg.branches) {
    json bj;
    if (!b.u_max.empty()) bj["u_max"] = b.u_max;
    bj["expr"] = b.expr;
    branches.push_back(bj);
  }
  j["nonlinearity"]["branches"] = branches;
  json tj;
  if (!cfg.p.empty()) tj["p"] = cfg.p;
  if (!cfg.q.empty()) tj["q"] = cfg.q;
  if (!cfg.r.empty()) tj["r"] = cfg.r;
  if (!tj.empty()) j["thresholds"] = tj;
  j["theorem"] = cfg.theorem;
  j["solver"]["N"] = cfg.N;
  j["solver"]["tol"] = cfg.tol;
  j["solver"]["seeds"] = cfg.seeds;
  j["paper_bounds"] = cfg.paper_bounds;
  return j;
}

}  // namespace

std::string ProblemConfig::to_json_text(int indent) const {
  return config_to_json(*this).dump(indent);
}

}  // namespace conebvp
