#include "conebvp/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

namespace conebvp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double em1(double x) { return -std::expm1(-x); }

bool is_minus_two_pi(double B) { return std::abs(B + kTwoPi) < 1e-12; }

// First branch of the certified B = -2*pi lower envelope.
double m2pi_k1_left(double t) {
  return std::expm1(kTwoPi * t) / std::expm1(kTwoPi);
}

// Second branch; the rational coefficients come from the certified bound.
double m2pi_k1_right(double t) {
  const double coef = 250000.0 / 62037.0 *
                      (1.0 - std::exp(-451.0 / 500.0 * std::numbers::pi));
  return coef * (std::exp(kTwoPi) - std::exp(kTwoPi * t)) /
         (kTwoPi * std::expm1(kTwoPi));
}

// k1 for B > 0: min of the two endpoint sections of u~.
double k1_pos(double B, double t, double t1) {
  if (t <= t1) return em1(B * t) / em1(B);
  return std::exp(-B * t) * em1(B * (1.0 - t)) / em1(B);
}

// k1 for B < 0 on the catalog range; mirror image of the B > 0 case.
double k1_neg(double B, double t, double t2) {
  const double bb = -B;
  if (t <= t2) return std::exp(-bb * (1.0 - t)) * em1(bb * t) / em1(bb);
  return em1(bb * (1.0 - t)) / em1(bb);
}

// Diagonal value u~(t,t); equals k2 for every second-order entry with
// B in [-2,2], with value 1 in the limit at both endpoints.
double k2_second_order(const GreenKernel& kernel, double t) {
  if (t <= 0.0 || t >= 1.0) return 1.0;
  return kernel.lower_branch(t, t) / (t * (1.0 - t));
}

double k1_fourth(double t) {
  return t <= 0.5 ? t * t * (1.0 - t) / 2.0 : t * (1.0 - t) * (1.0 - t) / 2.0;
}

double k2_fourth(double t) {
  if (t <= 0.25) return t * (1.0 - t) * (1.0 - t) / 2.0;
  if (t <= 0.5) return (1.0 - t) * (1.0 + 2.0 * t) * (1.0 + 2.0 * t) / 24.0;
  if (t <= 0.75) return t * (3.0 - 2.0 * t) * (3.0 - 2.0 * t) / 24.0;
  return t * t * (1.0 - t) / 2.0;
}

}  // namespace

NormalizedKernel::NormalizedKernel(GreenKernel kernel)
    : kernel_(std::move(kernel)) {}

double NormalizedKernel::left_limit(double t) const {
  const ProblemId& pid = kernel_.problem();
  if (pid.is_fourth_order()) return t * (1.0 - t) * (1.0 - t) / 2.0;
  const double B = pid.drift_or_zero();
  if (B == 0.0) return 1.0 - t;
  if (B > 0.0) return std::exp(-B * t) * em1(B * (1.0 - t)) / em1(B);
  const double bb = -B;
  return em1(bb * (1.0 - t)) / em1(bb);
}

double NormalizedKernel::right_limit(double t) const {
  const ProblemId& pid = kernel_.problem();
  if (pid.is_fourth_order()) return t * t * (1.0 - t) / 2.0;
  const double B = pid.drift_or_zero();
  if (B == 0.0) return t;
  if (B > 0.0) return em1(B * t) / em1(B);
  const double bb = -B;
  return std::exp(-bb * (1.0 - t)) * em1(bb * t) / em1(bb);
}

double NormalizedKernel::value(double t, double s) const {
  const ProblemId& pid = kernel_.problem();
  if (t <= pid.a || t >= pid.b)
    throw DomainError("normalized kernel: t must lie in the open interval");
  if (s < pid.a || s > pid.b)
    throw DomainError("normalized kernel: s outside [a,b]");
  if (s == pid.a) return left_limit(t);
  if (s == pid.b) return right_limit(t);
  return kernel_.value(t, s) / kernel_.phi(s);
}

double minus_two_pi_t3() {
  static const double t3 = bisect(
      [](double t) { return m2pi_k1_left(t) - m2pi_k1_right(t); }, 0.8, 0.9,
      1e-14);
  return t3;
}

Interval default_I1(const ProblemId& problem) {
  problem.validate();
  if (problem.is_fourth_order()) return {1.0 / 3.0, 2.0 / 3.0};
  const double B = problem.drift_or_zero();
  if (B == 0.0) return {0.25, 0.75};
  if (is_minus_two_pi(B))
    return {std::log((3.0 + std::exp(kTwoPi)) / 4.0) / kTwoPi, 0.9151};
  if (B > 0.0 && B <= 2.0)
    return {1.0 - std::log((1.0 + 3.0 * std::exp(B)) / 4.0) / B,
            1.0 - std::log((3.0 + std::exp(B)) / 4.0) / B};
  if (B < 0.0 && B >= -2.0) {
    const double bb = -B;
    return {std::log((std::exp(bb) + 3.0) / 4.0) / bb,
            std::log((3.0 * std::exp(bb) + 1.0) / 4.0) / bb};
  }
  throw UnsupportedProblem(
      "default_I1: second-order catalog covers B in [-2,2] and B = -2*pi");
}

Envelope envelope_closed_form(const ProblemId& problem) {
  problem.validate();
  Envelope env;
  env.problem = problem;
  env.I1 = default_I1(problem);

  if (problem.is_fourth_order()) {
    env.k1 = k1_fourth;
    env.k2 = k2_fourth;
    env.K1 = 1.0 / 16.0;
    env.K2 = 1.0 / 12.0;
    env.m1 = 1.0 / 27.0;
    env.kinks = {0.25, 0.5, 0.75};
    return env;
  }

  const double B = problem.drift_or_zero();
  auto kernel = std::make_shared<GreenKernel>(problem);

  if (B == 0.0) {
    env.k1 = [](double t) { return std::min(t, 1.0 - t); };
    env.k2 = [](double) { return 1.0; };
    env.K1 = 0.5;
    env.K2 = 1.0;
    env.m1 = 0.25;
    env.kinks = {0.5};
    return env;
  }

  if (is_minus_two_pi(B)) {
    const double t3 = minus_two_pi_t3();
    env.k1 = [t3](double t) {
      return t <= t3 ? m2pi_k1_left(t) : m2pi_k1_right(t);
    };
    // The exact k2 is unstated for this entry; u~ <= 1 is the certified
    // upper envelope, so the constant 1 is stored.
    env.k2 = [](double) { return 1.0; };
    env.K1 = m2pi_k1_left(t3);
    env.K2 = 1.0;
    env.m1 = 0.25;  // attained at a1 by construction of I1
    env.kinks = {t3};
    env.k1_is_lower_bound = true;
    return env;
  }

  if (B > 0.0 && B <= 2.0) {
    const double t1 = 1.0 - std::log((1.0 + std::exp(B)) / 2.0) / B;
    env.k1 = [B, t1](double t) { return k1_pos(B, t, t1); };
    env.k2 = [kernel](double t) { return k2_second_order(*kernel, t); };
    env.K1 = 0.5;
    env.K2 = 1.0;
    env.m1 = 0.25;
    env.kinks = {t1};
    return env;
  }

  if (B < 0.0 && B >= -2.0) {
    const double bb = -B;
    const double t2 = std::log((std::exp(bb) + 1.0) / 2.0) / bb;
    env.k1 = [B, t2](double t) { return k1_neg(B, t, t2); };
    env.k2 = [kernel](double t) { return k2_second_order(*kernel, t); };
    env.K1 = 0.5;
    env.K2 = 1.0;
    env.m1 = 0.25;
    env.kinks = {t2};
    return env;
  }

  throw UnsupportedProblem(
      "envelope_closed_form: second-order catalog covers B in [-2,2] and "
      "B = -2*pi");
}

namespace {

// min (or max) of u~(t, .) over s in [a,b], golden-refined around the
// discrete extremum of an ns-point scan.
double row_extremum(const NormalizedKernel& nk, double t, int ns, bool want_max) {
  const ProblemId& pid = nk.kernel().problem();
  double best = 0.0;
  int best_j = 0;
  for (int j = 0; j <= ns; ++j) {
    double s = pid.a + (pid.b - pid.a) * j / ns;
    double v = nk.value(t, s);
    if (j == 0 || (want_max ? v > best : v < best)) {
      best = v;
      best_j = j;
    }
  }
  double slo = pid.a + (pid.b - pid.a) * std::max(0, best_j - 1) / ns;
  double shi = pid.a + (pid.b - pid.a) * std::min(ns, best_j + 1) / ns;
  auto f = [&](double s) { return nk.value(t, s); };
  double s_star = want_max ? golden_max(f, slo, shi, 1e-10)
                           : golden_min(f, slo, shi, 1e-10);
  double v_star = nk.value(t, s_star);
  return want_max ? std::max(best, v_star) : std::min(best, v_star);
}

}  // namespace

Envelope envelope_numeric(const GreenKernel& kernel, GridSpec grid,
                          std::optional<Interval> I1_override) {
  const int res = std::max(64, grid.resolution);
  const ProblemId& pid = kernel.problem();
  auto nk_ptr = std::make_shared<NormalizedKernel>(kernel);

  Envelope env;
  env.problem = pid;
  env.I1 = I1_override ? *I1_override : default_I1(pid);
  // Row extrema are computed on demand at the requested t, so the numeric
  // envelope carries no interpolation error at branch kinks.
  env.k1 = [nk_ptr, res](double t) { return row_extremum(*nk_ptr, t, res, false); };
  env.k2 = [nk_ptr, res](double t) { return row_extremum(*nk_ptr, t, res, true); };

  const NormalizedKernel& nk = *nk_ptr;
  auto k1_exact = [&](double t) { return row_extremum(nk, t, res, false); };
  auto k2_exact = [&](double t) { return row_extremum(nk, t, res, true); };
  // K1, K2, m1 from a 4096-point t-grid with golden refinement.
  auto refine_extremum = [&](const std::function<double(double)>& f,
                             double lo, double hi, bool want_max) {
    const int n = 4096;
    double best = 0.0, best_t = lo;
    for (int i = 0; i < n; ++i) {
      double t = lo + (hi - lo) * (i + 0.5) / n;
      double v = f(t);
      if (i == 0 || (want_max ? v > best : v < best)) {
        best = v;
        best_t = t;
      }
    }
    double h = (hi - lo) / n;
    double tlo = std::max(lo + 1e-12, best_t - h);
    double thi = std::min(hi - 1e-12, best_t + h);
    double t_star = want_max ? golden_max(f, tlo, thi, 1e-10)
                             : golden_min(f, tlo, thi, 1e-10);
    return want_max ? std::max(best, f(t_star)) : std::min(best, f(t_star));
  };
  env.K1 = refine_extremum(k1_exact, pid.a, pid.b, true);
  env.K2 = refine_extremum(k2_exact, pid.a, pid.b, true);
  env.m1 = refine_extremum(k1_exact, env.I1.lo, env.I1.hi, false);
  // endpoints of I1 compete for the minimum of k1 on the closed interval
  env.m1 = std::min({env.m1, k1_exact(env.I1.lo), k1_exact(env.I1.hi)});
  return env;
}

}  // namespace conebvp
