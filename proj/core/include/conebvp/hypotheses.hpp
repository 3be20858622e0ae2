#pragma once

#include <string>
#include <vector>

#include "conebvp/nonlinearity.hpp"
#include "conebvp/quadrature.hpp"

namespace conebvp {

enum class HypothesisId {
  H1, H2, H1Star, H2Star, H3, H4,
  Thm5_i, Thm5_ii, Thm5_iii,
  Thm6_a, Thm6_b, Thm6_c,
};

std::string to_string(HypothesisId id);

/// How strictness of an inequality is audited.
///  - None: margin >= 0 suffices.
///  - AtValue: additionally, the pointwise margin at one u value must be
///    strictly positive for every t (the paper's "strict at u = q").
///  - Everywhere: the inequality is strict on the whole rectangle. A
///    single-point equality cannot break the fixed-point argument (the
///    inequalities enter the proofs under an integral against Phi), so the
///    audit requires the Phi-weighted t-average of the margin to stay
///    strictly positive on every u-slice, while the pointwise margin stays
///    nonnegative. An identically-tight slice fails; a boundary touch at
///    isolated points does not.
enum class Strictness { None, AtValue, Everywhere };

struct HypothesisReport {
  HypothesisId id{};
  double p = 0.0, q = 0.0, r = 0.0;  // thresholds used; 0 when not applicable
  bool pass = false;
  double margin = 0.0;     // worst-case signed margin over the rectangle
  double t_witness = 0.0;  // point achieving the worst margin
  double u_witness = 0.0;
  Strictness strictness = Strictness::None;
  bool strict_pass = true;    // meaningful when strictness != None
  double strict_margin = 0.0; // audited strictness margin
  double coefficient = 0.0;   // threshold coefficient the check used
  Interval t_range{}, u_range{};
};

struct CheckOptions {
  int grid = 512;             // samples per axis per branch
  double refine_tol = 1e-10;  // golden-section tolerance
  bool use_paper_bounds = false;  // use the paper's floor rationals
  bool relax_thm5_iii = false;    // audit (iii) strictly at u = p only
};

/// (H1): f(t,u) <= p / (K2 * intPhi) on [a,b] x [0,p].
HypothesisReport check_H1(const Nonlinearity& f, const ConeConstants& c,
                          double p, const CheckOptions& opts = {});

/// (H2): f(t,u) >= K2 u / (K1 * intK1PhiI1) on I1 x [(m1/K2) q, q].
HypothesisReport check_H2(const Nonlinearity& f, const ConeConstants& c,
                          double q, const CheckOptions& opts = {});

/// (H1*): (H1) plus strictness at u = p.
HypothesisReport check_H1_star(const Nonlinearity& f, const ConeConstants& c,
                               double p, const CheckOptions& opts = {});

/// (H2*): (H2) plus strictness at u = q.
HypothesisReport check_H2_star(const Nonlinearity& f, const ConeConstants& c,
                               double q, const CheckOptions& opts = {});

/// Theorem 5 conditions (i)-(iii) for 0 < p < q < r.
std::vector<HypothesisReport> check_thm5(const Nonlinearity& f,
                                         const ConeConstants& c, double p,
                                         double q, double r,
                                         const CheckOptions& opts = {});

/// Theorem 6 conditions (a)-(c) for 0 < p < q, (K2/m1) q <= r.
std::vector<HypothesisReport> check_thm6(const Nonlinearity& f,
                                         const ConeConstants& c, double p,
                                         double q, double r,
                                         const CheckOptions& opts = {});

/// Numeric estimate of one limit ratio limsup/liminf of f(t,u)/u.
struct LimitLeg {
  double value = 0.0;   // extreme (over the t samples) of the final estimate
  bool diverged = false;   // estimate exceeded 1e8 and was still growing
  bool vanishes = false;   // estimate fell below 1e-8
};

struct LimitRatios {
  LimitLeg f0_plus;    // sup over t in I of limsup_{u->0+} f/u
  LimitLeg f0_minus;   // inf over t in I1 of liminf_{u->0+} f/u
  LimitLeg finf_plus;  // sup over t in I of limsup_{u->inf} f/u
  LimitLeg finf_minus; // inf over t in I1 of liminf_{u->inf} f/u
};

struct ProbeSchedule {
  int steps = 40;  // u = 2^-j and u = 2^j for j = 1..steps
};

LimitRatios limit_ratios(const Nonlinearity& f, const Interval& I1,
                         int t_samples = 33, ProbeSchedule sched = {});

/// Corollary conditions (H3) and (H4) from the limit ratios; returns the
/// two reports in that order.
std::vector<HypothesisReport> check_corollary24(const LimitRatios& limits,
                                                const ConeConstants& c);

}  // namespace conebvp
