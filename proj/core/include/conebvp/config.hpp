#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conebvp/hypotheses.hpp"
#include "conebvp/solver.hpp"

namespace conebvp {

/// One problem description as read from a config file. Numeric fields that
/// benefit from exactness (drift, branch bounds, thresholds) are kept as
/// expression strings so a report echo reproduces the config verbatim.
struct ProblemConfig {
  int n = 2;
  int k = 1;
  std::string drift;  // constant expression; empty for the fourth order
  std::optional<std::array<std::string, 2>> I1_override;

  struct BranchSpec {
    std::string u_max;  // constant expression; empty on the last branch
    std::string expr;   // f(t, u) on the branch
  };
  std::vector<BranchSpec> branches;

  std::string p, q, r;  // constant expressions; empty when unused
  std::string theorem = "thm5";

  int N = 224;
  double tol = 1e-10;
  int seeds = 24;
  bool paper_bounds = false;

  ProblemId problem_id() const;
  Nonlinearity nonlinearity() const;
  TheoremId theorem_id() const;
  double p_value() const;
  double q_value() const;
  double r_value() const;
  std::optional<Interval> I1() const;

  /// Throws ConfigError naming the offending field.
  static ProblemConfig from_json_text(const std::string& text);
  std::string to_json_text(int indent = 2) const;
};

/// Evaluates a constant expression ("log(2+5^(1/2))", "-2*pi", "1/28").
double eval_constant(const std::string& expr);

struct CorpusEntry {
  std::string name;
  std::string description;
  ProblemConfig config;
};

/// The catalog examples: F1 under the two-solution theorems and F2 under
/// the three-solution theorems for each tabulated drift, plus the two
/// clamped-beam examples.
const std::vector<CorpusEntry>& builtin_corpus();
const CorpusEntry* find_corpus_entry(const std::string& name);

/// Everything one pipeline run produces.
struct RunReport {
  ProblemConfig config;  // echo; re-parsing it reproduces the report
  Envelope envelope;
  ConeConstants constants;       // computed, sharp
  ConeConstants constants_used;  // after the paper-bounds flag
  std::vector<HypothesisReport> hypotheses;
  bool hypotheses_pass = false;
  std::vector<BvpSolution> solutions;
  std::vector<double> no_convergence_seeds;
  std::optional<MultiplicityCertificate> certificate;
  std::map<std::string, double> timing_ms;
};

/// Constants + the hypothesis checks the selected theorem needs.
RunReport run_hypothesis_pipeline(const ProblemConfig& config);

/// Full pipeline: hypotheses, then fixed points and the certificate.
RunReport run_solve_pipeline(const ProblemConfig& config);

std::string report_to_json_text(const RunReport& report, int indent = 2);

/// CSV table of t, s, u~(t,s), k1(t), k2(t) on a grid x grid lattice
/// (t interior, s including the endpoints through the kernel limits).
std::string envelope_csv(const ProblemConfig& config, int grid);

/// CSV table of one solution's nodes: t, u.
std::string solution_csv(const BvpSolution& solution);

}  // namespace conebvp
