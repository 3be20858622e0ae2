#pragma once

#include <cstdint>

#include "conebvp/envelope.hpp"
#include "conebvp/numerics.hpp"

namespace conebvp {

/// Adaptive Gauss-Kronrod integration (7/15 pair) of f over [a, b] to the
/// given absolute tolerance. The integrand is pre-split at the interior
/// points in `splits`; each piece is then bisected until the local error
/// estimate passes. Throws QuadratureFailure past the depth limit.
double integrate_adaptive(const Fn1& f, double a, double b, double abs_tol,
                          std::span<const double> splits = {},
                          int max_depth = 48);

/// Scalar integrals and derived hypothesis coefficients for one envelope.
struct ConeConstants {
  double intPhi = 0.0;      // integral of Phi over [a,b]
  double intPhiI1 = 0.0;    // integral of Phi over I1
  double intK1PhiI1 = 0.0;  // integral of k1*Phi over I1
  double cH1 = 0.0;         // 1 / (K2 * intPhi)
  double cH2 = 0.0;         // K2 / (K1 * intK1PhiI1)
  double cThm5i = 0.0;      // 1 / (m1 * intPhiI1)
  double ratio = 0.0;       // K2 / m1
  double K1 = 0.0, K2 = 0.0, m1 = 0.0;  // copied from the envelope
  Interval I1{};
};

/// Integrates Phi and k1*Phi (split at the envelope kinks) and fills in the
/// derived coefficients. tol is clamped into [1e-14, 1e-6].
ConeConstants cone_constants(const Envelope& envelope, double tol = 1e-13);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

/// |value - claimed| <= tol.
bool verify_rational(double value, Rational claimed, double tol);

/// Replaces the sharp constants by the paper's certified floor rationals
/// where the catalog prints them (the transcendental-drift entries). For
/// entries whose constants are exact rationals the result equals the
/// computed constants. Coefficients built from floors are conservative:
/// hypothesis checks that pass with them also pass with the sharp values.
ConeConstants paper_bound_constants(const Envelope& envelope,
                                    const ConeConstants& computed);

}  // namespace conebvp
