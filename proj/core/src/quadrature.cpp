#include "conebvp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conebvp {

namespace {

// Gauss-Kronrod 7/15 pair on [-1,1] (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct GkResult {
  double kronrod;
  double err;
};

GkResult gk15(const Fn1& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double fc = f(mid);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(mid - dx) + f(mid + dx);
    res_k += kWgk[j] * fsum;
    if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
  }
  res_g *= half;
  res_k *= half;
  double err = std::abs(res_k - res_g);
  // QUADPACK-style sharpening of the raw difference
  err = std::min(err, std::pow(200.0 * err, 1.5));
  return {res_k, err};
}

double integrate_piece(const Fn1& f, double a, double b, double tol,
                       int depth, int max_depth) {
  GkResult r = gk15(f, a, b);
  if (r.err <= tol || b - a < 1e-15) return r.kronrod;
  if (depth >= max_depth)
    throw QuadratureFailure("integrate_adaptive: depth limit exceeded");
  const double mid = 0.5 * (a + b);
  return integrate_piece(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
         integrate_piece(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const Fn1& f, double a, double b, double abs_tol,
                          std::span<const double> splits, int max_depth) {
  std::vector<double> pts(splits.begin(), splits.end());
  pts = merge_splits(std::move(pts), a, b, 1e-13);
  double total = 0.0;
  const double piece_tol = abs_tol / static_cast<double>(pts.size());
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    total += integrate_piece(f, pts[i], pts[i + 1], piece_tol, 0, max_depth);
  return total;
}

ConeConstants cone_constants(const Envelope& env, double tol) {
  tol = std::clamp(tol, 1e-14, 1e-6);
  const ProblemId& pid = env.problem;
  auto phi_fn = [&pid](double s) { return phi(pid, s); };
  auto k1phi_fn = [&](double s) { return env.k1(s) * phi(pid, s); };

  ConeConstants c;
  c.K1 = env.K1;
  c.K2 = env.K2;
  c.m1 = env.m1;
  c.I1 = env.I1;
  c.intPhi = integrate_adaptive(phi_fn, pid.a, pid.b, tol);
  c.intPhiI1 = integrate_adaptive(phi_fn, env.I1.lo, env.I1.hi, tol);
  c.intK1PhiI1 =
      integrate_adaptive(k1phi_fn, env.I1.lo, env.I1.hi, tol, env.kinks);
  c.cH1 = 1.0 / (env.K2 * c.intPhi);
  c.cH2 = env.K2 / (env.K1 * c.intK1PhiI1);
  c.cThm5i = 1.0 / (env.m1 * c.intPhiI1);
  c.ratio = env.K2 / env.m1;
  return c;
}

bool verify_rational(double value, Rational claimed, double tol) {
  return std::abs(value - claimed.value()) <= tol;
}

ConeConstants paper_bound_constants(const Envelope& env,
                                    const ConeConstants& computed) {
  ConeConstants c = computed;
  if (!env.problem.is_second_order()) return c;
  const double B = env.problem.drift_or_zero();
  auto apply = [&c](Rational phiI1, Rational k1phiI1, double K1_floor) {
    c.intPhiI1 = phiI1.value();
    c.intK1PhiI1 = k1phiI1.value();
    c.K1 = K1_floor;
    c.cH2 = c.K2 / (c.K1 * c.intK1PhiI1);
    c.cThm5i = 1.0 / (c.m1 * c.intPhiI1);
  };
  if (std::abs(B + 2.0 * std::numbers::pi) < 1e-12) {
    apply({43, 2500}, {539, 100000}, 47.0 / 125.0);
  } else {
    // B = +-log(2+sqrt(5)); mirror-symmetric entries share their floors.
    const double b_star = std::log(2.0 + std::sqrt(5.0));
    if (std::abs(std::abs(B) - b_star) < 1e-12)
      apply({957, 10000}, {3587, 100000}, computed.K1);
  }
  return c;
}

}  // namespace conebvp
