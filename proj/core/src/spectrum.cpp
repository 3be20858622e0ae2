#include "conebvp/spectrum.hpp"

#include <cmath>
#include <numbers>

namespace conebvp {

namespace {
constexpr double kPi = std::numbers::pi;
}

AdmissibleInterval admissible_M_second_order(double B) {
  AdmissibleInterval iv;
  iv.lower_infinite = true;
  iv.upper = (B * B + 4.0 * kPi * kPi) / 4.0;
  iv.upper_open = true;
  return iv;
}

double fourth_order_lambda1() {
  static const double lam = bisect(
      [](double x) { return std::cos(x) * std::cosh(x) - 1.0; }, 4.0, 5.0,
      1e-13);
  return lam;
}

double fourth_order_lambda2() {
  // Solve for x = lambda / sqrt(2) on (pi, 3*pi/2), clear of the tan pole.
  static const double lam = [] {
    double x = bisect(
        [](double v) { return std::tan(v) - std::tanh(v); }, kPi + 1e-6,
        1.5 * kPi - 1e-6, 1e-13);
    return std::numbers::sqrt2 * x;
  }();
  return lam;
}

AdmissibleInterval admissible_M_fourth_order() {
  AdmissibleInterval iv;
  const double l1 = fourth_order_lambda1();
  const double l2 = fourth_order_lambda2();
  iv.lower = -l1 * l1 * l1 * l1;
  iv.upper = l2 * l2 * l2 * l2;
  iv.lower_open = true;
  iv.upper_open = false;
  return iv;
}

}  // namespace conebvp
