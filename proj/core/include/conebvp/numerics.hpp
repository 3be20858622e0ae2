#pragma once

#include <functional>
#include <span>
#include <vector>

namespace conebvp {

/// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

using Fn1 = std::function<double(double)>;

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
/// Computed once per m by Newton iteration on the Legendre polynomial
/// and cached; thread-compatible after first use of a given m.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int m);

/// Map the reference rule onto [a, b] and accumulate f.
double gauss_integrate(const Fn1& f, double a, double b, int m);

/// Bisection on [lo, hi]; f(lo) and f(hi) must have opposite signs.
/// Runs until the bracket width falls below tol. Throws RootNotFound
/// when the initial bracket does not straddle a sign change.
double bisect(const Fn1& f, double lo, double hi, double tol = 1e-14,
              int max_iter = 200);

/// Golden-section minimization of f on [lo, hi] to x-tolerance tol.
/// Returns the abscissa of the minimum.
double golden_min(const Fn1& f, double lo, double hi, double tol = 1e-10);
inline double golden_max(const Fn1& f, double lo, double hi,
                         double tol = 1e-10) {
  return golden_min([&f](double x) { return -f(x); }, lo, hi, tol);
}

/// Barycentric Lagrange interpolation through (x_i, y_i); the x_i must be
/// distinct. Exact reproduction when t coincides with a node.
double barycentric_eval(std::span<const double> x, std::span<const double> y,
                        double t);

/// Barycentric weights for a fixed node set (precomputed form).
std::vector<double> barycentric_weights(std::span<const double> x);
double barycentric_eval_with_weights(std::span<const double> x,
                                     std::span<const double> w,
                                     std::span<const double> y, double t);

/// Sorted union of split points with near-duplicates (within merge_tol)
/// collapsed. Endpoints lo/hi are always kept.
std::vector<double> merge_splits(std::vector<double> pts, double lo, double hi,
                                 double merge_tol = 1e-9);

}  // namespace conebvp
