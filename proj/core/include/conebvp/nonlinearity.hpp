#pragma once

#include <limits>
#include <vector>

#include "conebvp/expression.hpp"
#include "conebvp/numerics.hpp"

namespace conebvp {

/// One u-range of a piecewise nonlinearity. The branch applies for
/// u <= u_upper (the catalog convention); the last branch is unbounded.
struct NonlinearityBranch {
  double u_upper = std::numeric_limits<double>::infinity();
  Expression expr;
};

/// Piecewise-defined continuous f(t, u) >= 0 on [a,b] x [0, inf).
///
/// Construction validates that the branches partition [0, inf) in
/// increasing order and that adjacent branches agree at every boundary to
/// 1e-9 relative, sampled at 50 values of t. Nonnegativity is checked by
/// the callers on the rectangles they actually probe.
class Nonlinearity {
 public:
  Nonlinearity(std::vector<NonlinearityBranch> branches, Interval t_domain);

  double operator()(double t, double u) const;

  const std::vector<NonlinearityBranch>& branches() const { return branches_; }
  const Interval& t_domain() const { return t_domain_; }

  /// Interior branch boundaries in increasing order.
  const std::vector<double>& boundaries() const { return boundaries_; }

  /// Index of the branch evaluated at u.
  int branch_index(double u) const;

  /// The sub-range of [ulo, uhi] covered by branch i (empty if none).
  Interval branch_range(int i, double ulo, double uhi) const;

 private:
  std::vector<NonlinearityBranch> branches_;
  std::vector<double> boundaries_;
  Interval t_domain_;
};

}  // namespace conebvp
