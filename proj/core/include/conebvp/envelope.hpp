#pragma once

#include <functional>
#include <vector>

#include "conebvp/kernels.hpp"

namespace conebvp {

/// Normalized kernel u~(t,s) = sigma*g(t,s) / Phi(s), extended continuously
/// to s = a and s = b by the closed-form limits of each catalog entry.
class NormalizedKernel {
 public:
  explicit NormalizedKernel(GreenKernel kernel);

  const GreenKernel& kernel() const { return kernel_; }

  /// u~(t,s) for t in (a,b), s in [a,b]. Throws DomainError at t = a or b.
  double value(double t, double s) const;

  /// Continuous extension at s = a (limit s -> a+).
  double left_limit(double t) const;
  /// Continuous extension at s = b (limit s -> b-).
  double right_limit(double t) const;

 private:
  GreenKernel kernel_;
};

inline double normalized(const GreenKernel& kernel, double t, double s) {
  return NormalizedKernel(kernel).value(t, s);
}

/// Envelope data certifying property (Pg1):
///   Phi(s) k1(t) <= sigma*g(t,s) <= Phi(s) k2(t).
struct Envelope {
  ProblemId problem;
  std::function<double(double)> k1;
  std::function<double(double)> k2;
  double K1 = 0.0;  // max of k1 on [a,b]
  double K2 = 0.0;  // max of k2 on [a,b]
  double m1 = 0.0;  // min of k1 on I1
  Interval I1{};
  /// Interior points where k1 or k2 switch branch; quadrature and mesh
  /// generation split at these.
  std::vector<double> kinks;
  /// True when k1 is a certified lower bound rather than the exact
  /// minimum of u~ over s (the B = -2*pi entry).
  bool k1_is_lower_bound = false;
};

/// Closed-form envelope for a catalog entry. Second order supports
/// B in [-2, 2] plus the special B = -2*pi entry; anything else throws
/// UnsupportedProblem.
Envelope envelope_closed_form(const ProblemId& problem);

/// The catalog interval I1 for the given problem (same coverage as
/// envelope_closed_form).
Interval default_I1(const ProblemId& problem);

/// Branch-switch point t3 of the certified B = -2*pi lower envelope,
/// obtained by bisection on the branch equality (not the printed decimal).
double minus_two_pi_t3();

struct GridSpec {
  int resolution = 256;  // points per axis, clamped to >= 64
};

/// Numeric envelope: per t-row min/max of u~ over s, refined by
/// golden-section around the discrete extremum; K1, K2, m1 extracted from
/// a 4096-point t-grid with golden refinement. Works for any drift.
Envelope envelope_numeric(const GreenKernel& kernel, GridSpec grid = {},
                          std::optional<Interval> I1_override = {});

}  // namespace conebvp
