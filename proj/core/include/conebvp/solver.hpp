#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conebvp/envelope.hpp"
#include "conebvp/kernels.hpp"
#include "conebvp/nonlinearity.hpp"

namespace conebvp {

/// Nystrom discretization of L u(t) = integral of G(t,s) f(s,u(s)) ds.
///
/// Composite Gauss-Legendre panels; the t-grid equals the s-grid. Besides
/// the plain nodes/weights/kernel-matrix data, the discretization carries
/// product-integration weights `op`: row i integrates G(t_i, s) against the
/// per-panel polynomial interpolant of the integrand, with the panel
/// containing t_i split at the diagonal. This keeps the quadrature exact
/// for piecewise-polynomial kernels and spectrally accurate in general,
/// which plain node-sampling across the kernel's diagonal kink is not.
struct Discretization {
  ProblemId problem;
  std::vector<double> nodes;
  std::vector<double> weights;   // plain GL weights, sum = b - a
  std::vector<double> panel_edges;
  std::vector<double> base_splits;  // mandatory split points it was built on
  int points_per_panel = 16;
  std::vector<std::vector<double>> kernel;  // G_ij = sigma*g(t_i, s_j)
  std::vector<std::vector<double>> op;      // product-integration weights

  int size() const { return static_cast<int>(nodes.size()); }
  int panel_count() const { return static_cast<int>(panel_edges.size()) - 1; }

  /// Panel-wise barycentric interpolation of nodal data.
  double interpolate(std::span<const double> nodal, double t) const;

  /// Nystrom extension sum_j op[.][j] f_j evaluated at an off-grid t.
  double extend(const GreenKernel& g, std::span<const double> fvals,
                double t) const;
};

/// Builds an N-node discretization (N >= 32 after clamping), splitting
/// panels at the given points (I1 endpoints, envelope kinks, nonlinearity
/// crossings) and subdividing the widest intervals until the node budget
/// is met.
Discretization discretize(const GreenKernel& kernel, int N,
                          std::span<const double> extra_splits = {});

/// (L u)_i via the product-integration weights, evaluating f at max(u, 0).
std::vector<double> apply_L(const Discretization& d, const Nonlinearity& f,
                            std::span<const double> u);

struct BvpSolution {
  std::vector<double> values;  // nodal, >= 0
  std::shared_ptr<const Discretization> mesh;
  double gamma = 0.0;  // sup norm
  double theta = 0.0;  // max over I1
  double alpha = 0.0;  // min over I1
  double fixed_point_residual = 0.0;  // ||u - L u||_inf
  double ode_residual = 0.0;          // relative, see ode_residual()
  double cone_margin = 0.0;  // min_i u_i - (k1(t_i)/K2) gamma
  double seed_amplitude = 0.0;

  double at(double t) const { return mesh->interpolate(values, t); }
};

struct SolveOptions {
  int N = 224;
  double tol = 1e-10;
  int max_newton = 80;
  int picard_iterations = 200;
  int adapt_rounds = 6;
};

/// Geometric amplitude schedule on [p/10, 10r].
std::vector<double> default_seed_schedule(double p, double r, int count = 24);

/// Damped-Newton continuation from k1-shaped seeds, with Picard fallback,
/// clamping at zero, crossing-adaptive remeshing, and sup-norm
/// deduplication. Seeds that fail to converge are recorded in
/// *no_convergence_seeds (when non-null), never fatal.
std::vector<BvpSolution> find_fixed_points(
    const Discretization& d, const Envelope& env, const Nonlinearity& f,
    std::span<const double> seed_amplitudes, const SolveOptions& opts = {},
    std::vector<double>* no_convergence_seeds = nullptr);

/// Max relative residual of the differential equation recovered from the
/// solution interpolant by finite differences (5-point stencils for first
/// and second derivatives, 7-point for the fourth), normalized by
/// 1 + max|f| along the solution.
double ode_residual(const BvpSolution& sol, const Nonlinearity& f);

/// One-sided finite-difference probe of u'(a) and u'(b) (fourth order
/// boundary conditions); returns max of the two magnitudes.
double boundary_derivative_residual(const BvpSolution& sol);

enum class TheoremId { Thm2, Thm3, Thm4, Thm5, Thm6 };
std::string to_string(TheoremId id);

struct SlotCheck {
  std::string name;
  bool filled = false;
  int solution_index = -1;
  double margin = 0.0;
};

struct MultiplicityCertificate {
  TheoremId theorem{};
  bool pass = false;
  std::vector<SlotCheck> slots;
  bool ambiguous_assignment = false;  // some slot had several candidates
  std::string failure;                // names the first unfilled slot
};

/// Assigns solutions to the theorem's localization slots greedily (largest
/// margin first per slot); pass iff every slot is filled by a distinct
/// solution.
MultiplicityCertificate certify(const std::vector<BvpSolution>& solutions,
                                double p, double q, double r, TheoremId id);

}  // namespace conebvp
