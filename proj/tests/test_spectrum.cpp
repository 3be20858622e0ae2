#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conebvp/spectrum.hpp"
#include "oracle_helpers.hpp"

using namespace conebvp;

TEST_SUITE("spectrum") {

TEST_CASE("second order admissible interval") {
  auto iv0 = admissible_M_second_order(0.0);
  CHECK(iv0.lower_infinite);
  CHECK(iv0.upper == doctest::Approx(std::numbers::pi * std::numbers::pi)
                         .epsilon(1e-15));
  CHECK(iv0.upper_open);
  auto iv2 = admissible_M_second_order(2.0);
  CHECK(iv2.upper ==
        doctest::Approx(1.0 + std::numbers::pi * std::numbers::pi)
            .epsilon(1e-15));
  CHECK(iv0.contains(0.0));
  CHECK_FALSE(iv0.contains(iv0.upper));
}

TEST_CASE("shooting oracle confirms the threshold at B=0") {
  double eig = oracle::first_dirichlet_eigenvalue(0.0);
  CHECK(std::abs(eig - std::numbers::pi * std::numbers::pi) <= 1e-8);
  CHECK(std::abs(admissible_M_second_order(0.0).upper - eig) <= 1e-8);
}

TEST_CASE("shooting oracle confirms the B-dependence") {
  // threshold = first Dirichlet eigenvalue of u'' + B u' + M u
  for (double B : {1.0, -2.0, 3.5}) {
    double eig = oracle::first_dirichlet_eigenvalue(B);
    CHECK(std::abs(admissible_M_second_order(B).upper - eig) <= 1e-7);
  }
}

TEST_CASE("fourth order roots and interval") {
  const double l1 = fourth_order_lambda1();
  const double l2 = fourth_order_lambda2();
  CHECK(l1 == doctest::Approx(4.73).epsilon(1e-3));
  CHECK(l2 == doctest::Approx(5.55).epsilon(1e-3));
  // frozen from the bisection oracle on cos(x)cosh(x) - 1 over [4,5]
  CHECK(l1 == doctest::Approx(4.730040744862704).epsilon(1e-12));
  CHECK(std::abs(std::cos(l1) * std::cosh(l1) - 1.0) <= 1e-10);
  const double x = l2 / std::numbers::sqrt2;
  CHECK(std::abs(std::tan(x) - std::tanh(x)) <= 1e-10);

  auto iv = admissible_M_fourth_order();
  CHECK(iv.lower == doctest::Approx(-l1 * l1 * l1 * l1).epsilon(1e-15));
  CHECK(iv.upper == doctest::Approx(l2 * l2 * l2 * l2).epsilon(1e-15));
  CHECK(iv.lower_open);
  CHECK_FALSE(iv.upper_open);
  CHECK(iv.contains(0.0));
  CHECK(iv.contains(iv.upper));
  CHECK_FALSE(iv.contains(iv.lower));
}

TEST_CASE("root minimality: no earlier sign change") {
  const double l1 = fourth_order_lambda1();
  auto h = [](double x) { return std::cos(x) * std::cosh(x) - 1.0; };
  double prev = h(1e-4);
  for (int i = 1; i <= 10000; ++i) {
    double x = 1e-4 + (l1 - 1e-6 - 1e-4) * i / 10000.0;
    double v = h(x);
    if (v != 0.0 && prev != 0.0) CHECK((v > 0) == (prev > 0));
    prev = v;
  }
}

}  // TEST_SUITE
