#include "conebvp/kernels.hpp"

#include <cmath>

namespace conebvp {

namespace {

// 1 - exp(-x), accurate for small x.
inline double em1(double x) { return -std::expm1(-x); }

}  // namespace

void ProblemId::validate() const {
  if (!(a < b)) throw UnsupportedProblem("ProblemId: requires a < b");
  const bool second = order == 2 && left_multiplicity == 1;
  const bool fourth = order == 4 && left_multiplicity == 2 && !drift;
  if (!second && !fourth)
    throw UnsupportedProblem(
        "ProblemId: supported combinations are (n=2,k=1) and (n=4,k=2)");
  if (a != 0.0 || b != 1.0)
    throw UnsupportedProblem("ProblemId: catalog kernels are on [0,1]");
}

double phi(const ProblemId& problem, double s) {
  problem.validate();
  if (s < problem.a || s > problem.b)
    throw DomainError("phi: s outside [a,b]");
  const int nk = problem.order - problem.left_multiplicity;
  const int k = problem.left_multiplicity;
  return std::pow(s - problem.a, nk) * std::pow(problem.b - s, k);
}

GreenKernel::GreenKernel(const ProblemId& problem) : problem_(problem) {
  problem_.validate();
  const int nk = problem_.order - problem_.left_multiplicity;
  sigma_ = (nk % 2 == 0) ? 1 : -1;
}

// All branch formulas are arranged so every exponential argument is <= 0;
// they stay finite for arbitrarily large |B|.
double GreenKernel::lower_branch(double t, double s) const {
  if (problem_.is_fourth_order())
    return s * s / 6.0 * (1.0 - t) * (1.0 - t) * (3.0 * t - s - 2.0 * s * t);
  const double B = problem_.drift_or_zero();
  if (B == 0.0) return s * (1.0 - t);
  if (B > 0.0)
    return std::exp(B * (s - t)) * em1(B * s) * em1(B * (1.0 - t)) /
           (B * em1(B));
  const double bb = -B;
  return em1(bb * s) * em1(bb * (1.0 - t)) / (bb * em1(bb));
}

double GreenKernel::upper_branch(double t, double s) const {
  if (problem_.is_fourth_order())
    return (1.0 - s) * (1.0 - s) / 6.0 * t * t *
           (3.0 * s - t - 2.0 * s * t);
  const double B = problem_.drift_or_zero();
  if (B == 0.0) return t * (1.0 - s);
  if (B > 0.0) return em1(B * (1.0 - s)) * em1(B * t) / (B * em1(B));
  const double bb = -B;
  return std::exp(bb * (t - s)) * em1(bb * (1.0 - s)) * em1(bb * t) /
         (bb * em1(bb));
}

}  // namespace conebvp
