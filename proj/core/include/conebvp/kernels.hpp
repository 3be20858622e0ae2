#pragma once

#include <optional>

#include "conebvp/errors.hpp"
#include "conebvp/numerics.hpp"

namespace conebvp {

/// Identifies one boundary value problem from the supported catalog.
///
/// Supported combinations:
///  - n = 2, k = 1 on [0, 1], arbitrary real drift B
///    (u'' + B u' + M u with Dirichlet conditions),
///  - n = 4, k = 2 on [0, 1], no drift
///    (clamped beam u'''' + M u).
struct ProblemId {
  int order = 2;              // n
  int left_multiplicity = 1;  // k
  std::optional<double> drift;
  double a = 0.0;
  double b = 1.0;

  static ProblemId second_order(double B) {
    return ProblemId{2, 1, B, 0.0, 1.0};
  }
  static ProblemId fourth_order() {
    return ProblemId{4, 2, std::nullopt, 0.0, 1.0};
  }

  bool is_second_order() const { return order == 2; }
  bool is_fourth_order() const { return order == 4; }
  double drift_or_zero() const { return drift.value_or(0.0); }

  /// Throws UnsupportedProblem unless this is a catalog combination.
  void validate() const;
};

/// Weight Phi(s) = (s-a)^(n-k) (b-s)^k. Throws DomainError outside [a, b].
double phi(const ProblemId& problem, double s);

/// Signed Green's kernel of the catalog problem at M = 0.
///
/// value() returns sigma * g(t, s) with sigma = (-1)^(n-k), which is the
/// nonnegative kernel G entering the cone property: the paper tabulates -g
/// for the second-order problems and g itself for the clamped beam.
class GreenKernel {
 public:
  explicit GreenKernel(const ProblemId& problem);

  const ProblemId& problem() const { return problem_; }
  int sign() const { return sigma_; }

  /// sigma * g(t, s); branches agree on the diagonal, the s <= t branch
  /// is used there.
  double value(double t, double s) const {
    return s <= t ? lower_branch(t, s) : upper_branch(t, s);
  }

  /// Closed form valid for s <= t (evaluable slightly past the diagonal).
  double lower_branch(double t, double s) const;
  /// Closed form valid for t <= s.
  double upper_branch(double t, double s) const;

  double phi(double s) const { return conebvp::phi(problem_, s); }
  int phi_exponent_left() const {
    return problem_.order - problem_.left_multiplicity;
  }
  int phi_exponent_right() const { return problem_.left_multiplicity; }

 private:
  ProblemId problem_;
  int sigma_;
};

inline GreenKernel kernel_for(const ProblemId& problem) {
  return GreenKernel(problem);
}

}  // namespace conebvp
