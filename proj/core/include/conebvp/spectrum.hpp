#pragma once

#include "conebvp/kernels.hpp"

namespace conebvp {

/// Interval of parameters M for which the signed Green's function keeps the
/// cone property (Pg1).
struct AdmissibleInterval {
  double lower = 0.0;  // ignored when lower_infinite
  double upper = 0.0;
  bool lower_open = true;
  bool upper_open = true;
  bool lower_infinite = false;

  bool contains(double M) const {
    if (!lower_infinite) {
      if (lower_open ? M <= lower : M < lower) return false;
    }
    return upper_open ? M < upper : M <= upper;
  }
};

/// Second order: M in (-inf, (B^2 + 4*pi^2) / 4), upper end open.
AdmissibleInterval admissible_M_second_order(double B);

/// Fourth order: M in (-lambda1^4, lambda2^4], where lambda1 solves
/// cos(x) cosh(x) = 1 and lambda2 solves tan(x/sqrt2) = tanh(x/sqrt2),
/// both least positive roots, found by bracketed bisection to 1e-12.
AdmissibleInterval admissible_M_fourth_order();

double fourth_order_lambda1();
double fourth_order_lambda2();

}  // namespace conebvp
