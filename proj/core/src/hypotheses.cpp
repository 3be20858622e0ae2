#include "conebvp/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conebvp {

std::string to_string(HypothesisId id) {
  switch (id) {
    case HypothesisId::H1: return "H1";
    case HypothesisId::H2: return "H2";
    case HypothesisId::H1Star: return "H1*";
    case HypothesisId::H2Star: return "H2*";
    case HypothesisId::H3: return "H3";
    case HypothesisId::H4: return "H4";
    case HypothesisId::Thm5_i: return "Thm5.i";
    case HypothesisId::Thm5_ii: return "Thm5.ii";
    case HypothesisId::Thm5_iii: return "Thm5.iii";
    case HypothesisId::Thm6_a: return "Thm6.a";
    case HypothesisId::Thm6_b: return "Thm6.b";
    case HypothesisId::Thm6_c: return "Thm6.c";
  }
  return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// margin(t, u) for the two shapes of condition that occur:
//   upper bound:  margin = bound - f(t,u)          (bound constant in u)
//   lower linear: margin = f(t,u) - coef * u
struct MarginFn {
  const Nonlinearity* f;
  double constant = 0.0;  // "bound" for upper, "coef" for lower
  bool upper = false;

  double operator()(double t, double u) const {
    double fv = (*f)(t, u);
    return upper ? constant - fv : fv - constant * u;
  }
};

struct RectScan {
  double min_margin = kInf;
  double t_witness = 0.0, u_witness = 0.0;
};

// Coordinate-wise golden refinement of the minimum around (t0, u0).
void refine_min(const MarginFn& m, const Interval& tr, const Interval& ur,
                double ht, double hu, double tol, RectScan& best) {
  double t = best.t_witness, u = best.u_witness;
  for (int sweep = 0; sweep < 3; ++sweep) {
    double tlo = std::max(tr.lo, t - ht), thi = std::min(tr.hi, t + ht);
    if (thi > tlo)
      t = golden_min([&](double x) { return m(x, u); }, tlo, thi, tol);
    double ulo = std::max(ur.lo, u - hu), uhi = std::min(ur.hi, u + hu);
    if (uhi > ulo)
      u = golden_min([&](double x) { return m(t, x); }, ulo, uhi, tol);
  }
  double v = m(t, u);
  if (v < best.min_margin) {
    best.min_margin = v;
    best.t_witness = t;
    best.u_witness = u;
  }
}

// Scan of one branch rectangle: dense grid plus local refinement.
void scan_piece(const MarginFn& m, const Interval& tr, const Interval& ur,
                int grid, double tol, RectScan& best) {
  if (ur.hi < ur.lo) return;
  const int nt = grid, nu = ur.hi > ur.lo ? grid : 0;
  RectScan local;
  for (int i = 0; i <= nt; ++i) {
    double t = nt == 0 ? tr.lo : tr.lo + tr.width() * i / nt;
    for (int j = 0; j <= nu; ++j) {
      double u = nu == 0 ? ur.lo : ur.lo + ur.width() * j / nu;
      double v = m(t, u);
      if (v < local.min_margin) {
        local.min_margin = v;
        local.t_witness = t;
        local.u_witness = u;
      }
    }
  }
  double ht = nt ? tr.width() / nt : 0.0;
  double hu = nu ? ur.width() / nu : 0.0;
  refine_min(m, tr, ur, std::max(ht, 1e-14), std::max(hu, 1e-14), tol, local);
  if (local.min_margin < best.min_margin) best = local;
}

// min over t (grid + golden) of margin(t, u0).
double min_over_t(const MarginFn& m, const Interval& tr, double u0, int grid,
                  double tol) {
  RectScan best;
  scan_piece(m, tr, {u0, u0}, grid, tol, best);
  return best.min_margin;
}

// Phi-weighted t-average of the margin on the slice u = u0.
double slice_average(const MarginFn& m, const Interval& tr, double u0,
                     int grid) {
  // weight w(t) = (t-a)(b-t) relative to the catalog interval; any strictly
  // positive interior weight works, this one mirrors Phi.
  double num = 0.0, den = 0.0;
  for (int i = 0; i <= grid; ++i) {
    double t = tr.lo + tr.width() * i / grid;
    double w = (t - tr.lo) * (tr.hi - t);
    if (i == 0 || i == grid) w = 0.0;
    num += w * m(t, u0);
    den += w;
  }
  return den > 0.0 ? num / den : m(0.5 * (tr.lo + tr.hi), u0);
}

HypothesisReport run_check(HypothesisId id, const Nonlinearity& f,
                           const MarginFn& m, const Interval& tr,
                           const Interval& ur, Strictness strictness,
                           double strict_u, const CheckOptions& opts) {
  HypothesisReport rep;
  rep.id = id;
  rep.coefficient = m.constant;
  rep.t_range = tr;
  rep.u_range = ur;
  rep.strictness = strictness;

  RectScan best;
  for (int bi = 0; bi < static_cast<int>(f.branches().size()); ++bi) {
    Interval piece = f.branch_range(bi, ur.lo, ur.hi);
    if (piece.hi < piece.lo) continue;
    scan_piece(m, tr, piece, opts.grid, opts.refine_tol, best);
  }
  rep.margin = best.min_margin;
  rep.t_witness = best.t_witness;
  rep.u_witness = best.u_witness;

  // numerical slack for exact boundary cases (margin zero in exact
  // arithmetic must not fail from roundoff)
  const double scale =
      std::max({1.0, std::abs(m.constant), std::abs(m.constant) * ur.hi});
  const double tau = 1e-11 * scale;

  bool nonstrict_ok = rep.margin >= -tau;
  rep.strict_pass = true;
  if (strictness == Strictness::AtValue) {
    rep.strict_margin = min_over_t(m, tr, strict_u, opts.grid, opts.refine_tol);
    rep.strict_pass = rep.strict_margin > tau;
  } else if (strictness == Strictness::Everywhere) {
    // worst Phi-weighted slice average over u (per branch piece, golden
    // refined): must stay strictly positive
    double worst = kInf;
    for (int bi = 0; bi < static_cast<int>(f.branches().size()); ++bi) {
      Interval piece = f.branch_range(bi, ur.lo, ur.hi);
      if (piece.hi < piece.lo) continue;
      auto avg = [&](double u) { return slice_average(m, tr, u, opts.grid); };
      double lo_avg = kInf;
      int best_j = 0;
      const int nu = std::max(8, opts.grid / 8);
      for (int j = 0; j <= nu; ++j) {
        double u = piece.lo + piece.width() * j / nu;
        double v = avg(u);
        if (v < lo_avg) {
          lo_avg = v;
          best_j = j;
        }
      }
      if (piece.width() > 0.0) {
        double hu = piece.width() / nu;
        double ulo = std::max(piece.lo, piece.lo + (best_j - 1) * hu);
        double uhi = std::min(piece.hi, piece.lo + (best_j + 1) * hu);
        double u_star = golden_min(avg, ulo, uhi, opts.refine_tol);
        lo_avg = std::min(lo_avg, avg(u_star));
      }
      worst = std::min(worst, lo_avg);
    }
    rep.strict_margin = worst;
    rep.strict_pass = worst > tau;
  }
  rep.pass = nonstrict_ok && rep.strict_pass;
  return rep;
}

}  // namespace

HypothesisReport check_H1(const Nonlinearity& f, const ConeConstants& c,
                          double p, const CheckOptions& opts) {
  if (p <= 0.0) throw InvalidThreshold("check_H1: p must be positive");
  MarginFn m{&f, c.cH1 * p, true};
  HypothesisReport rep = run_check(HypothesisId::H1, f, m, f.t_domain(),
                                   {0.0, p}, Strictness::None, 0.0, opts);
  rep.p = p;
  return rep;
}

HypothesisReport check_H2(const Nonlinearity& f, const ConeConstants& c,
                          double q, const CheckOptions& opts) {
  if (q <= 0.0) throw InvalidThreshold("check_H2: q must be positive");
  MarginFn m{&f, c.cH2, false};
  HypothesisReport rep =
      run_check(HypothesisId::H2, f, m, c.I1, {c.m1 / c.K2 * q, q},
                Strictness::None, 0.0, opts);
  rep.q = q;
  return rep;
}

HypothesisReport check_H1_star(const Nonlinearity& f, const ConeConstants& c,
                               double p, const CheckOptions& opts) {
  if (p <= 0.0) throw InvalidThreshold("check_H1_star: p must be positive");
  MarginFn m{&f, c.cH1 * p, true};
  HypothesisReport rep = run_check(HypothesisId::H1Star, f, m, f.t_domain(),
                                   {0.0, p}, Strictness::AtValue, p, opts);
  rep.p = p;
  return rep;
}

HypothesisReport check_H2_star(const Nonlinearity& f, const ConeConstants& c,
                               double q, const CheckOptions& opts) {
  if (q <= 0.0) throw InvalidThreshold("check_H2_star: q must be positive");
  MarginFn m{&f, c.cH2, false};
  HypothesisReport rep =
      run_check(HypothesisId::H2Star, f, m, c.I1, {c.m1 / c.K2 * q, q},
                Strictness::AtValue, q, opts);
  rep.q = q;
  return rep;
}

std::vector<HypothesisReport> check_thm5(const Nonlinearity& f,
                                         const ConeConstants& c, double p,
                                         double q, double r,
                                         const CheckOptions& opts) {
  if (!(0.0 < p && p < q && q < r))
    throw ThresholdOrdering("check_thm5: requires 0 < p < q < r");
  std::vector<HypothesisReport> out;

  MarginFn mi{&f, c.cThm5i, false};
  out.push_back(run_check(HypothesisId::Thm5_i, f, mi, c.I1,
                          {r, c.ratio * r}, Strictness::AtValue, r, opts));

  MarginFn mii{&f, c.cH1 * q, true};
  out.push_back(run_check(HypothesisId::Thm5_ii, f, mii, f.t_domain(),
                          {0.0, c.ratio * q}, Strictness::AtValue, q, opts));

  MarginFn miii{&f, c.cH2, false};
  out.push_back(run_check(HypothesisId::Thm5_iii, f, miii, c.I1,
                          {c.m1 / c.K2 * p, p},
                          opts.relax_thm5_iii ? Strictness::AtValue
                                              : Strictness::Everywhere,
                          p, opts));
  for (auto& rep : out) {
    rep.p = p;
    rep.q = q;
    rep.r = r;
  }
  return out;
}

std::vector<HypothesisReport> check_thm6(const Nonlinearity& f,
                                         const ConeConstants& c, double p,
                                         double q, double r,
                                         const CheckOptions& opts) {
  if (!(0.0 < p && p < q))
    throw ThresholdOrdering("check_thm6: requires 0 < p < q");
  if (!(c.ratio * q <= r * (1.0 + 1e-12)))
    throw ThresholdOrdering("check_thm6: requires (K2/m1) q <= r");
  std::vector<HypothesisReport> out;

  MarginFn ma{&f, c.cH1 * r, true};
  out.push_back(run_check(HypothesisId::Thm6_a, f, ma, f.t_domain(), {0.0, r},
                          Strictness::None, 0.0, opts));

  MarginFn mb{&f, c.cH1 * p, true};
  out.push_back(run_check(HypothesisId::Thm6_b, f, mb, f.t_domain(), {0.0, p},
                          Strictness::Everywhere, p, opts));

  MarginFn mc{&f, c.cThm5i, false};
  out.push_back(run_check(HypothesisId::Thm6_c, f, mc, c.I1,
                          {q, c.ratio * q}, Strictness::AtValue, q, opts));
  for (auto& rep : out) {
    rep.p = p;
    rep.q = q;
    rep.r = r;
  }
  return out;
}

namespace {

// Final f/u estimate along one probe direction for a fixed t.
struct ProbeResult {
  double value;
  bool diverged;
  bool vanishes;
};

ProbeResult probe(const Nonlinearity& f, double t, bool towards_zero,
                  int steps) {
  double last = 0.0;
  for (int j = 1; j <= steps; ++j) {
    double u = towards_zero ? std::ldexp(1.0, -j) : std::ldexp(1.0, j);
    last = f(t, u) / u;
    if (last > 1e8) return {last, true, false};
    if (last < 1e-8) return {last, false, true};
  }
  return {last, false, false};
}

LimitLeg aggregate(const std::vector<ProbeResult>& rs, bool want_max) {
  LimitLeg leg;
  bool first = true;
  for (const auto& r : rs) {
    if (first || (want_max ? r.value > leg.value : r.value < leg.value)) {
      leg.value = r.value;
      first = false;
    }
  }
  // a sup diverges when any sample diverges; an inf only when all do
  bool all_div = true, any_div = false, all_van = true, any_van = false;
  for (const auto& r : rs) {
    all_div &= r.diverged;
    any_div |= r.diverged;
    all_van &= r.vanishes;
    any_van |= r.vanishes;
  }
  leg.diverged = want_max ? any_div : all_div;
  leg.vanishes = want_max ? all_van : any_van;
  return leg;
}

}  // namespace

LimitRatios limit_ratios(const Nonlinearity& f, const Interval& I1,
                         int t_samples, ProbeSchedule sched) {
  std::vector<ProbeResult> zero_I, inf_I, zero_I1, inf_I1;
  const Interval I = f.t_domain();
  for (int i = 0; i < t_samples; ++i) {
    double w = t_samples == 1 ? 0.5 : static_cast<double>(i) / (t_samples - 1);
    double tI = I.lo + I.width() * w;
    double tI1 = I1.lo + I1.width() * w;
    zero_I.push_back(probe(f, tI, true, sched.steps));
    inf_I.push_back(probe(f, tI, false, sched.steps));
    zero_I1.push_back(probe(f, tI1, true, sched.steps));
    inf_I1.push_back(probe(f, tI1, false, sched.steps));
  }
  LimitRatios lr;
  lr.f0_plus = aggregate(zero_I, true);
  lr.finf_plus = aggregate(inf_I, true);
  lr.f0_minus = aggregate(zero_I1, false);
  lr.finf_minus = aggregate(inf_I1, false);
  return lr;
}

std::vector<HypothesisReport> check_corollary24(const LimitRatios& limits,
                                                const ConeConstants& c) {
  const double thr_low = c.cH1;  // 1 / (K2 intPhi)
  const double thr_high = c.K2 * c.K2 / (c.K1 * c.m1 * c.intK1PhiI1);

  auto leg_upper = [&](const LimitLeg& leg) {  // leg value must be < thr_low
    if (leg.vanishes) return thr_low;
    if (leg.diverged) return -kInf;
    return thr_low - leg.value;
  };
  auto leg_lower = [&](const LimitLeg& leg) {  // leg value must be > thr_high
    if (leg.diverged) return kInf;
    if (leg.vanishes) return -thr_high;
    return leg.value - thr_high;
  };

  std::vector<HypothesisReport> out(2);
  out[0].id = HypothesisId::H3;
  out[0].coefficient = thr_high;
  out[0].margin = std::min(leg_upper(limits.f0_plus),
                           leg_lower(limits.finf_minus));
  out[0].pass = out[0].margin > 0.0;

  out[1].id = HypothesisId::H4;
  out[1].coefficient = thr_high;
  out[1].margin = std::min(leg_upper(limits.finf_plus),
                           leg_lower(limits.f0_minus));
  out[1].pass = out[1].margin > 0.0;
  return out;
}

}  // namespace conebvp
