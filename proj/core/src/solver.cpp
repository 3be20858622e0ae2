#include "conebvp/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace conebvp {

namespace {

constexpr int kFineOrder = 32;  // rule for the product-integration moments
constexpr double kInf = std::numeric_limits<double>::infinity();

// Lagrange basis values of the panel nodes at x.
std::vector<double> lagrange_row(std::span<const double> xs,
                                 std::span<const double> bw, double x) {
  const size_t m = xs.size();
  std::vector<double> out(m, 0.0);
  double den = 0.0;
  for (size_t j = 0; j < m; ++j) {
    double dx = x - xs[j];
    if (std::abs(dx) < 1e-300) {
      out.assign(m, 0.0);
      out[j] = 1.0;
      return out;
    }
    out[j] = bw[j] / dx;
    den += out[j];
  }
  for (double& v : out) v /= den;
  return out;
}

int panel_of(const std::vector<double>& edges, double t) {
  auto it = std::upper_bound(edges.begin(), edges.end(), t);
  int p = static_cast<int>(it - edges.begin()) - 1;
  return std::clamp(p, 0, static_cast<int>(edges.size()) - 2);
}

}  // namespace

double Discretization::interpolate(std::span<const double> nodal,
                                   double t) const {
  const int m = points_per_panel;
  const int p = panel_of(panel_edges, t);
  std::span<const double> xs(nodes.data() + p * m, static_cast<size_t>(m));
  std::span<const double> ys(nodal.data() + p * m, static_cast<size_t>(m));
  return barycentric_eval(xs, ys, t);
}

double Discretization::extend(const GreenKernel& g,
                              std::span<const double> fvals, double t) const {
  // integral of G(t,s) * interpolant(fvals)(s) over [a,b]
  const int m = points_per_panel;
  const GaussRule& fine = gauss_legendre(kFineOrder);
  double total = 0.0;
  for (int p = 0; p + 1 < static_cast<int>(panel_edges.size()); ++p) {
    const double lo = panel_edges[p], hi = panel_edges[p + 1];
    std::span<const double> xs(nodes.data() + p * m, static_cast<size_t>(m));
    std::span<const double> ys(fvals.data() + p * m, static_cast<size_t>(m));
    auto bw = barycentric_weights(xs);
    auto segment = [&](double slo, double shi) {
      if (shi - slo <= 0.0) return;
      const double mid = 0.5 * (slo + shi), half = 0.5 * (shi - slo);
      for (int q = 0; q < kFineOrder; ++q) {
        double s = mid + half * fine.nodes[q];
        double fv = barycentric_eval_with_weights(xs, bw, ys, s);
        total += half * fine.weights[q] * g.value(t, s) * fv;
      }
    };
    if (t > lo && t < hi) {
      segment(lo, t);
      segment(t, hi);
    } else {
      segment(lo, hi);
    }
  }
  return total;
}

Discretization discretize(const GreenKernel& kernel, int N,
                          std::span<const double> extra_splits) {
  const ProblemId& pid = kernel.problem();
  N = std::max(32, N);
  const int m = 16;
  const int target_panels = std::max(2, (N + m - 1) / m);

  std::vector<double> edges(extra_splits.begin(), extra_splits.end());
  edges = merge_splits(std::move(edges), pid.a, pid.b);
  Discretization d;
  d.problem = pid;
  d.base_splits = edges;
  d.points_per_panel = m;

  // subdivide the widest interval until the panel budget is met
  while (static_cast<int>(edges.size()) - 1 < target_panels) {
    size_t widest = 0;
    for (size_t i = 1; i + 1 < edges.size(); ++i)
      if (edges[i + 1] - edges[i] > edges[widest + 1] - edges[widest])
        widest = i;
    edges.insert(edges.begin() + static_cast<long>(widest) + 1,
                 0.5 * (edges[widest] + edges[widest + 1]));
  }
  d.panel_edges = edges;

  const GaussRule& rule = gauss_legendre(m);
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (int i = 0; i < m; ++i) {
      d.nodes.push_back(mid + half * rule.nodes[i]);
      d.weights.push_back(half * rule.weights[i]);
    }
  }

  const int n = d.size();
  d.kernel.assign(static_cast<size_t>(n), std::vector<double>(n, 0.0));
  d.op.assign(static_cast<size_t>(n), std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d.kernel[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          kernel.value(d.nodes[static_cast<size_t>(i)],
                       d.nodes[static_cast<size_t>(j)]);

  // Product-integration rows. For each panel, integrate
  // G(t_i, s) L_j(s) ds exactly (to fine-rule accuracy); the panel holding
  // t_i is split at the diagonal so each segment sees one smooth branch.
  const GaussRule& fine = gauss_legendre(kFineOrder);
  const int panels = d.panel_count();
  std::vector<std::vector<double>> bar_weights(static_cast<size_t>(panels));
  for (int p = 0; p < panels; ++p) {
    std::span<const double> xs(d.nodes.data() + p * m,
                               static_cast<size_t>(m));
    bar_weights[static_cast<size_t>(p)] = barycentric_weights(xs);
  }
  // moments for panels not containing t_i depend on the panel only via the
  // fine-point kernel values, so cache the fine points and basis values
  std::vector<std::vector<double>> fine_pts(static_cast<size_t>(panels));
  std::vector<std::vector<std::vector<double>>> fine_basis(
      static_cast<size_t>(panels));
  for (int p = 0; p < panels; ++p) {
    const double lo = edges[static_cast<size_t>(p)];
    const double hi = edges[static_cast<size_t>(p) + 1];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    std::span<const double> xs(d.nodes.data() + p * m,
                               static_cast<size_t>(m));
    for (int q = 0; q < kFineOrder; ++q) {
      double s = mid + half * fine.nodes[q];
      fine_pts[static_cast<size_t>(p)].push_back(s);
      fine_basis[static_cast<size_t>(p)].push_back(
          lagrange_row(xs, bar_weights[static_cast<size_t>(p)], s));
    }
  }

  for (int i = 0; i < n; ++i) {
    const double t = d.nodes[static_cast<size_t>(i)];
    for (int p = 0; p < panels; ++p) {
      const double lo = edges[static_cast<size_t>(p)];
      const double hi = edges[static_cast<size_t>(p) + 1];
      const double half = 0.5 * (hi - lo);
      std::span<const double> xs(d.nodes.data() + p * m,
                                 static_cast<size_t>(m));
      if (t <= lo || t >= hi) {
        for (int q = 0; q < kFineOrder; ++q) {
          double s = fine_pts[static_cast<size_t>(p)][static_cast<size_t>(q)];
          double kv = kernel.value(t, s) * half *
                      fine.weights[static_cast<size_t>(q)];
          const auto& basis =
              fine_basis[static_cast<size_t>(p)][static_cast<size_t>(q)];
          for (int j = 0; j < m; ++j)
            d.op[static_cast<size_t>(i)][static_cast<size_t>(p * m + j)] +=
                kv * basis[static_cast<size_t>(j)];
        }
      } else {
        for (auto [slo, shi] : {std::pair{lo, t}, std::pair{t, hi}}) {
          if (shi - slo <= 0.0) continue;
          const double smid = 0.5 * (slo + shi), shalf = 0.5 * (shi - slo);
          for (int q = 0; q < kFineOrder; ++q) {
            double s = smid + shalf * fine.nodes[q];
            double kv = kernel.value(t, s) * shalf * fine.weights[q];
            auto basis =
                lagrange_row(xs, bar_weights[static_cast<size_t>(p)], s);
            for (int j = 0; j < m; ++j)
              d.op[static_cast<size_t>(i)][static_cast<size_t>(p * m + j)] +=
                  kv * basis[static_cast<size_t>(j)];
          }
        }
      }
    }
  }
  return d;
}

namespace {

Eigen::VectorXd eval_f(const Discretization& d, const Nonlinearity& f,
                       const Eigen::VectorXd& u) {
  const int n = d.size();
  Eigen::VectorXd F(n);
  for (int i = 0; i < n; ++i)
    F[i] = f(d.nodes[static_cast<size_t>(i)], std::max(u[i], 0.0));
  return F;
}

Eigen::MatrixXd op_matrix(const Discretization& d) {
  const int n = d.size();
  Eigen::MatrixXd W(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      W(i, j) = d.op[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return W;
}

struct NewtonResult {
  Eigen::VectorXd u;
  double residual = kInf;
  bool converged = false;
};

double residual_norm(const Discretization& d, const Nonlinearity& f,
                     const Eigen::MatrixXd& W, const Eigen::VectorXd& u) {
  return (u - W * eval_f(d, f, u)).lpNorm<Eigen::Infinity>();
}

NewtonResult newton_solve(const Discretization& d, const Nonlinearity& f,
                          const Eigen::MatrixXd& W, Eigen::VectorXd u,
                          const SolveOptions& opts) {
  const int n = d.size();
  auto run_newton = [&](Eigen::VectorXd v, int iters) -> NewtonResult {
    for (int it = 0; it < iters; ++it) {
      Eigen::VectorXd F = eval_f(d, f, v);
      Eigen::VectorXd r = v - W * F;
      double rn = r.lpNorm<Eigen::Infinity>();
      if (rn <= opts.tol) return {v, rn, true};
      Eigen::VectorXd fp(n);
      for (int i = 0; i < n; ++i) {
        double ui = std::max(v[i], 0.0);
        double h = 1e-7 * (1.0 + std::abs(ui));
        fp[i] = (f(d.nodes[static_cast<size_t>(i)], ui + h) - F[i]) / h;
      }
      Eigen::MatrixXd J =
          Eigen::MatrixXd::Identity(n, n) - W * fp.asDiagonal();
      Eigen::VectorXd du = J.partialPivLu().solve(r);
      if (!du.allFinite()) return {v, rn, false};
      double lam = 1.0;
      bool improved = false;
      for (int h = 0; h < 30; ++h) {
        Eigen::VectorXd vn = v - lam * du;
        if (residual_norm(d, f, W, vn) < rn) {
          v = vn;
          improved = true;
          break;
        }
        lam *= 0.5;
      }
      if (!improved) return {v, rn, false};
    }
    double rn = residual_norm(d, f, W, v);
    return {v, rn, rn <= opts.tol};
  };

  NewtonResult res = run_newton(u, opts.max_newton);
  if (res.converged) return res;
  // Picard fallback, then one more Newton pass
  Eigen::VectorXd v = res.u;
  for (int it = 0; it < opts.picard_iterations; ++it) {
    Eigen::VectorXd next = W * eval_f(d, f, v);
    double step = (next - v).lpNorm<Eigen::Infinity>();
    v = next;
    if (step < opts.tol) break;
    if (!v.allFinite() || v.lpNorm<Eigen::Infinity>() > 1e12)
      return {res.u, res.residual, false};
  }
  return run_newton(v, opts.max_newton);
}

// crossing points of the interpolated solution with each branch boundary
std::vector<double> find_crossings(const Discretization& d,
                                   std::span<const double> u,
                                   const std::vector<double>& thresholds) {
  std::vector<double> out;
  const int scan = 192;
  for (int p = 0; p < d.panel_count(); ++p) {
    const double lo = d.panel_edges[static_cast<size_t>(p)];
    const double hi = d.panel_edges[static_cast<size_t>(p) + 1];
    for (double thr : thresholds) {
      double prev_t = lo;
      double prev_v = d.interpolate(u, lo) - thr;
      for (int i = 1; i <= scan; ++i) {
        double t = lo + (hi - lo) * i / scan;
        double v = d.interpolate(u, t) - thr;
        if (v == 0.0) {
          out.push_back(t);
        } else if (prev_v != 0.0 && (prev_v < 0.0) != (v < 0.0)) {
          double x = bisect(
              [&](double tt) { return d.interpolate(u, tt) - thr; }, prev_t,
              t, 1e-13);
          out.push_back(x);
        }
        prev_t = t;
        prev_v = v;
      }
    }
  }
  return out;
}

double extremum_on(const Discretization& d, std::span<const double> u,
                   const Interval& range, bool want_max) {
  double best = want_max ? -kInf : kInf;
  auto consider = [&](double v) {
    best = want_max ? std::max(best, v) : std::min(best, v);
  };
  for (int p = 0; p < d.panel_count(); ++p) {
    double lo = std::max(range.lo, d.panel_edges[static_cast<size_t>(p)]);
    double hi = std::min(range.hi, d.panel_edges[static_cast<size_t>(p) + 1]);
    if (hi <= lo) continue;
    const int ns = 64;
    double best_local = want_max ? -kInf : kInf;
    double best_t = lo;
    for (int i = 0; i <= ns; ++i) {
      double t = lo + (hi - lo) * i / ns;
      double v = d.interpolate(u, t);
      if (want_max ? v > best_local : v < best_local) {
        best_local = v;
        best_t = t;
      }
    }
    double h = (hi - lo) / ns;
    double tlo = std::max(lo, best_t - h), thi = std::min(hi, best_t + h);
    auto fn = [&](double t) { return d.interpolate(u, t); };
    double t_star = want_max ? golden_max(fn, tlo, thi, 1e-12)
                             : golden_min(fn, tlo, thi, 1e-12);
    consider(best_local);
    consider(d.interpolate(u, t_star));
  }
  return best;
}

double solution_distance(const BvpSolution& a, const BvpSolution& b) {
  double worst = 0.0;
  const int n = 257;
  const double lo = a.mesh->problem.a, hi = a.mesh->problem.b;
  for (int i = 0; i <= n; ++i) {
    double t = lo + (hi - lo) * i / n;
    worst = std::max(worst, std::abs(a.at(t) - b.at(t)));
  }
  return worst;
}

}  // namespace

std::vector<double> apply_L(const Discretization& d, const Nonlinearity& f,
                            std::span<const double> u) {
  const int n = d.size();
  std::vector<double> out(static_cast<size_t>(n), 0.0);
  std::vector<double> F(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    F[static_cast<size_t>(j)] =
        f(d.nodes[static_cast<size_t>(j)],
          std::max(u[static_cast<size_t>(j)], 0.0));
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += d.op[static_cast<size_t>(i)][static_cast<size_t>(j)] *
             F[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

std::vector<double> default_seed_schedule(double p, double r, int count) {
  std::vector<double> seeds;
  const double lo = p / 10.0, hi = 10.0 * r;
  for (int i = 0; i < count; ++i) {
    double w = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    seeds.push_back(lo * std::pow(hi / lo, w));
  }
  return seeds;
}

std::vector<BvpSolution> find_fixed_points(
    const Discretization& d, const Envelope& env, const Nonlinearity& f,
    std::span<const double> seed_amplitudes, const SolveOptions& opts,
    std::vector<double>* no_convergence_seeds) {
  GreenKernel kern(d.problem);
  Eigen::MatrixXd W0 = op_matrix(d);
  const int n0 = d.size();

  struct Candidate {
    Eigen::VectorXd u;
    double seed;
  };
  std::vector<Candidate> candidates;
  for (double A : seed_amplitudes) {
    Eigen::VectorXd u0(n0);
    for (int i = 0; i < n0; ++i)
      u0[i] = A * env.k1(d.nodes[static_cast<size_t>(i)]) / env.K1;
    NewtonResult res = newton_solve(d, f, W0, u0, opts);
    if (!res.converged) {
      if (no_convergence_seeds) no_convergence_seeds->push_back(A);
      continue;
    }
    Eigen::VectorXd u = res.u.cwiseMax(0.0);
    bool dup = false;
    for (const auto& c : candidates) {
      double g = c.u.lpNorm<Eigen::Infinity>();
      if ((u - c.u).lpNorm<Eigen::Infinity>() <= 1e-4 * (1.0 + g)) {
        dup = true;
        break;
      }
    }
    if (!dup) candidates.push_back({u, A});
  }

  // crossing-adaptive refinement per distinct candidate
  std::vector<BvpSolution> out;
  for (auto& cand : candidates) {
    auto mesh = std::make_shared<Discretization>(d);
    std::vector<double> u(cand.u.data(), cand.u.data() + cand.u.size());
    std::vector<double> prev_cross;
    for (int round = 0; round < opts.adapt_rounds; ++round) {
      std::vector<double> cross = find_crossings(*mesh, u, f.boundaries());
      bool stable = cross.size() == prev_cross.size();
      if (stable) {
        std::sort(cross.begin(), cross.end());
        for (size_t i = 0; i < cross.size(); ++i)
          if (std::abs(cross[i] - prev_cross[i]) > 1e-12) stable = false;
      }
      if (stable) break;
      prev_cross = cross;
      std::sort(prev_cross.begin(), prev_cross.end());
      std::vector<double> splits = d.base_splits;
      splits.insert(splits.end(), cross.begin(), cross.end());
      auto refined =
          std::make_shared<Discretization>(discretize(kern, opts.N, splits));
      const int n = refined->size();
      Eigen::VectorXd u0(n);
      for (int i = 0; i < n; ++i)
        u0[i] = mesh->interpolate(u, refined->nodes[static_cast<size_t>(i)]);
      Eigen::MatrixXd W = op_matrix(*refined);
      NewtonResult res = newton_solve(*refined, f, W, u0, opts);
      if (!res.converged) break;  // keep the last good mesh
      mesh = refined;
      Eigen::VectorXd uc = res.u.cwiseMax(0.0);
      u.assign(uc.data(), uc.data() + uc.size());
    }

    BvpSolution sol;
    sol.mesh = mesh;
    sol.values = u;
    sol.seed_amplitude = cand.seed;
    std::vector<double> Lu = apply_L(*mesh, f, u);
    double resid = 0.0;
    for (int i = 0; i < mesh->size(); ++i)
      resid = std::max(resid, std::abs(u[static_cast<size_t>(i)] -
                                       Lu[static_cast<size_t>(i)]));
    sol.fixed_point_residual = resid;
    if (resid > std::max(opts.tol, 1e-9)) {
      if (no_convergence_seeds) no_convergence_seeds->push_back(cand.seed);
      continue;
    }
    const Interval full{mesh->problem.a, mesh->problem.b};
    sol.gamma = extremum_on(*mesh, u, full, true);
    sol.theta = extremum_on(*mesh, u, env.I1, true);
    sol.alpha = extremum_on(*mesh, u, env.I1, false);
    double cm = kInf;
    for (int i = 0; i < mesh->size(); ++i) {
      double t = mesh->nodes[static_cast<size_t>(i)];
      cm = std::min(cm, u[static_cast<size_t>(i)] -
                            env.k1(t) / env.K2 * sol.gamma);
    }
    sol.cone_margin = cm;
    sol.ode_residual = ode_residual(sol, f);
    out.push_back(std::move(sol));
  }

  // final dedup across adapted meshes
  std::vector<BvpSolution> unique;
  for (auto& s : out) {
    bool dup = false;
    for (const auto& t : unique)
      if (solution_distance(s, t) <= 1e-4 * (1.0 + t.gamma)) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(std::move(s));
  }
  std::sort(unique.begin(), unique.end(),
            [](const BvpSolution& a, const BvpSolution& b) {
              return a.gamma < b.gamma;
            });
  return unique;
}

double ode_residual(const BvpSolution& sol, const Nonlinearity& f) {
  const Discretization& d = *sol.mesh;
  const bool fourth = d.problem.is_fourth_order();
  const double B = d.problem.drift_or_zero();
  double fmax = 0.0;
  for (int i = 0; i < d.size(); ++i)
    fmax = std::max(fmax, std::abs(f(d.nodes[static_cast<size_t>(i)],
                                     sol.values[static_cast<size_t>(i)])));
  auto uat = [&](double t) { return d.interpolate(sol.values, t); };

  double worst = 0.0;
  const double min_width = 0.02 * (d.problem.b - d.problem.a);
  for (int p = 0; p < d.panel_count(); ++p) {
    const double lo = d.panel_edges[static_cast<size_t>(p)];
    const double hi = d.panel_edges[static_cast<size_t>(p) + 1];
    if (hi - lo < min_width) continue;  // crossing slivers
    const double h = (hi - lo) / 30.0;
    const int guard = fourth ? 3 : 2;
    for (int i = 0; i < 9; ++i) {
      double t = lo + (hi - lo) * (i + 1) / 10.0;
      if (t - guard * h < lo || t + guard * h > hi) continue;
      double um2 = uat(t - 2 * h), um1 = uat(t - h), u0 = uat(t);
      double up1 = uat(t + h), up2 = uat(t + 2 * h);
      double res;
      if (fourth) {
        double um3 = uat(t - 3 * h), up3 = uat(t + 3 * h);
        double d4 = (-um3 / 6 + 2 * um2 - 13 * um1 / 2 + 28 * u0 / 3 -
                     13 * up1 / 2 + 2 * up2 - up3 / 6) /
                    (h * h * h * h);
        res = d4 - f(t, std::max(u0, 0.0));
      } else {
        double d1 = (um2 - 8 * um1 + 8 * up1 - up2) / (12 * h);
        double d2 = (-um2 + 16 * um1 - 30 * u0 + 16 * up1 - up2) /
                    (12 * h * h);
        res = d2 + B * d1 + f(t, std::max(u0, 0.0));
      }
      worst = std::max(worst, std::abs(res));
    }
  }
  return worst / (1.0 + fmax);
}

double boundary_derivative_residual(const BvpSolution& sol) {
  const Discretization& d = *sol.mesh;
  auto uat = [&](double t) { return d.interpolate(sol.values, t); };
  auto one_sided = [&](double x0, double dir, double h) {
    return dir *
           (-25.0 * uat(x0) + 48.0 * uat(x0 + dir * h) -
            36.0 * uat(x0 + dir * 2 * h) + 16.0 * uat(x0 + dir * 3 * h) -
            3.0 * uat(x0 + dir * 4 * h)) /
           (12.0 * h);
  };
  const double wa = d.panel_edges[1] - d.panel_edges[0];
  const double wb =
      d.panel_edges.back() - d.panel_edges[d.panel_edges.size() - 2];
  double da = one_sided(d.problem.a, +1.0, wa / 8.0);
  double db = one_sided(d.problem.b, -1.0, wb / 8.0);
  return std::max(std::abs(da), std::abs(db));
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Thm2: return "thm2";
    case TheoremId::Thm3: return "thm3";
    case TheoremId::Thm4: return "thm4";
    case TheoremId::Thm5: return "thm5";
    case TheoremId::Thm6: return "thm6";
  }
  return "?";
}

namespace {

struct SlotSpec {
  std::string name;
  std::function<double(const BvpSolution&)> margin;  // > 0 qualifies
};

std::vector<SlotSpec> slots_for(TheoremId id, double p, double q, double r) {
  const double eps_pos = 1e-8;
  auto nonzero = [eps_pos](const BvpSolution& s, double cap) {
    return std::min(s.gamma - eps_pos * (1.0 + cap), cap - s.gamma);
  };
  switch (id) {
    case TheoremId::Thm2: {
      double lo = std::min(p, q), hi = std::max(p, q);
      return {{"gamma between p and q",
               [lo, hi](const BvpSolution& s) {
                 return std::min(s.gamma - lo, hi - s.gamma);
               }}};
    }
    case TheoremId::Thm3:
      return {{"0 < gamma(u1) < p",
               [p, nonzero](const BvpSolution& s) { return nonzero(s, p); }},
              {"gamma(u2) > p",
               [p](const BvpSolution& s) { return s.gamma - p; }}};
    case TheoremId::Thm4:
      return {{"0 < gamma(u1) < q",
               [q, nonzero](const BvpSolution& s) { return nonzero(s, q); }},
              {"gamma(u2) > q",
               [q](const BvpSolution& s) { return s.gamma - q; }}};
    case TheoremId::Thm5:
      return {{"p < gamma(u1), theta(u1) < q",
               [p, q](const BvpSolution& s) {
                 return std::min(s.gamma - p, q - s.theta);
               }},
              {"q < theta(u2), alpha(u2) < r",
               [q, r](const BvpSolution& s) {
                 return std::min(s.theta - q, r - s.alpha);
               }}};
    case TheoremId::Thm6: {
      auto cap = [r](const BvpSolution& s) {
        return r * (1.0 + 1e-9) - s.gamma;
      };
      return {{"theta(u1) < p",
               [p, cap](const BvpSolution& s) {
                 return std::min(p - s.theta, cap(s));
               }},
              {"alpha(u2) > q",
               [q, cap](const BvpSolution& s) {
                 return std::min(s.alpha - q, cap(s));
               }},
              {"p < theta(u3), alpha(u3) < q",
               [p, q, cap](const BvpSolution& s) {
                 return std::min({s.theta - p, q - s.alpha, cap(s)});
               }}};
    }
  }
  return {};
}

}  // namespace

MultiplicityCertificate certify(const std::vector<BvpSolution>& solutions,
                                double p, double q, double r, TheoremId id) {
  MultiplicityCertificate cert;
  cert.theorem = id;
  auto specs = slots_for(id, p, q, r);
  std::vector<bool> used(solutions.size(), false);
  bool all_filled = true;
  for (const auto& spec : specs) {
    SlotCheck slot;
    slot.name = spec.name;
    int best = -1;
    double best_margin = 0.0;
    int candidates = 0;
    for (size_t i = 0; i < solutions.size(); ++i) {
      if (used[i]) continue;
      double m = spec.margin(solutions[i]);
      if (m > 0.0) {
        ++candidates;
        if (best < 0 || m > best_margin) {
          best = static_cast<int>(i);
          best_margin = m;
        }
      }
    }
    if (candidates > 1) cert.ambiguous_assignment = true;
    if (best >= 0) {
      used[static_cast<size_t>(best)] = true;
      slot.filled = true;
      slot.solution_index = best;
      slot.margin = best_margin;
    } else {
      all_filled = false;
      if (cert.failure.empty()) cert.failure = "slot unfilled: " + spec.name;
    }
    cert.slots.push_back(std::move(slot));
  }
  cert.pass = all_filled && !specs.empty();
  return cert;
}

}  // namespace conebvp
