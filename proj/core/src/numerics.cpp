#include "conebvp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "conebvp/errors.hpp"

namespace conebvp {

namespace {

GaussRule compute_gauss_legendre(int m) {
  GaussRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  // Newton iteration from the Chebyshev-like initial guess; standard
  // Golub-Welsch alternatives are overkill for the m used here.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int m) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, compute_gauss_legendre(m)).first;
  return it->second;
}

double gauss_integrate(const Fn1& f, double a, double b, int m) {
  const GaussRule& rule = gauss_legendre(m);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < m; ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

double bisect(const Fn1& f, double lo, double hi, double tol, int max_iter) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw RootNotFound("bisect: no sign change on the given bracket");
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_min(const Fn1& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> barycentric_weights(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> w(n, 1.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (k != j) w[j] /= (x[j] - x[k]);
  return w;
}

double barycentric_eval_with_weights(std::span<const double> x,
                                     std::span<const double> w,
                                     std::span<const double> y, double t) {
  const int n = static_cast<int>(x.size());
  double num = 0.0, den = 0.0;
  for (int j = 0; j < n; ++j) {
    double dx = t - x[j];
    if (dx == 0.0) return y[j];
    double c = w[j] / dx;
    num += c * y[j];
    den += c;
  }
  return num / den;
}

double barycentric_eval(std::span<const double> x, std::span<const double> y,
                        double t) {
  auto w = barycentric_weights(x);
  return barycentric_eval_with_weights(x, w, y, t);
}

std::vector<double> merge_splits(std::vector<double> pts, double lo, double hi,
                                 double merge_tol) {
  pts.push_back(lo);
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double x : pts) {
    if (x < lo - merge_tol || x > hi + merge_tol) continue;
    x = std::clamp(x, lo, hi);
    if (out.empty() || x - out.back() > merge_tol) out.push_back(x);
  }
  // keep the right endpoint exact even if the last interior point was close
  if (out.back() != hi) {
    if (hi - out.back() <= merge_tol) out.back() = hi;
    else out.push_back(hi);
  }
  return out;
}

}  // namespace conebvp
