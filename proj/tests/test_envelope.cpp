#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conebvp/envelope.hpp"

using namespace conebvp;

namespace {
const double kBpos = std::log(2.0 + std::sqrt(5.0));
const double kBneg = std::log(std::sqrt(5.0) - 2.0);  // = -kBpos
const double kB2pi = -2.0 * std::numbers::pi;

std::vector<ProblemId> catalog() {
  return {ProblemId::second_order(0.0), ProblemId::second_order(kBpos),
          ProblemId::second_order(kBneg), ProblemId::second_order(kB2pi),
          ProblemId::fourth_order()};
}
}  // namespace

TEST_SUITE("envelope") {

TEST_CASE("normalized kernel quotient and limits, B=0") {
  NormalizedKernel nk(kernel_for(ProblemId::second_order(0.0)));
  CHECK(nk.value(1.0 / 3.0, 2.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-14));
  // limit of s(1-t)/(s(1-s)) as s -> 0+ is 1-t
  CHECK(nk.value(0.25, 0.0) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(nk.value(0.25, 1.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(nk.value(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(nk.value(1.0, 0.5), DomainError);
}

TEST_CASE("endpoint limits match one-sided probes") {
  for (const auto& pid : catalog()) {
    NormalizedKernel nk(kernel_for(pid));
    const double eps = 1e-6;
    for (double t : {0.2, 0.5, 0.8}) {
      CHECK(nk.value(t, 0.0) ==
            doctest::Approx(nk.value(t, eps)).epsilon(1e-4));
      CHECK(nk.value(t, 1.0) ==
            doctest::Approx(nk.value(t, 1.0 - eps)).epsilon(1e-4));
    }
  }
}

TEST_CASE("closed-form constants, B=0") {
  Envelope env = envelope_closed_form(ProblemId::second_order(0.0));
  CHECK(env.K1 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(env.K2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(env.m1 == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(env.I1.lo == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(env.I1.hi == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("closed-form constants, fourth order") {
  Envelope env = envelope_closed_form(ProblemId::fourth_order());
  CHECK(env.K1 == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(env.K2 == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  CHECK(env.m1 == doctest::Approx(1.0 / 27.0).epsilon(1e-15));
  CHECK(env.I1.lo == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(env.I1.hi == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // K2 attained at the midpoint, k2(1/2) = 1/12
  CHECK(env.k2(0.5) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("I1 for B = log(2+sqrt5) has the printed endpoints") {
  Interval I1 = default_I1(ProblemId::second_order(kBpos));
  CHECK(I1.lo ==
        doctest::Approx(std::log(std::sqrt(5.0) - 1.0) / kBpos).epsilon(1e-14));
  CHECK(I1.hi ==
        doctest::Approx(std::log(1.0 + 3.0 / std::sqrt(5.0)) / kBpos)
            .epsilon(1e-14));
  Envelope env = envelope_closed_form(ProblemId::second_order(kBpos));
  CHECK(env.m1 == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(env.k1(I1.lo) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(env.k1(I1.hi) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("B = -2pi certified envelope") {
  const double t3 = minus_two_pi_t3();
  CHECK(t3 == doctest::Approx(0.844992).epsilon(2e-5));
  Envelope env = envelope_closed_form(ProblemId::second_order(kB2pi));
  CHECK(env.k1_is_lower_bound);
  CHECK(env.K1 > 47.0 / 125.0);
  CHECK(env.K1 < 0.3765);
  CHECK(env.K1 == doctest::Approx(0.37642).epsilon(1e-4));
  CHECK(env.K2 == 1.0);
  // m1 = k1(a1) = 1/4 exactly by construction; k1(b1) stays above it
  CHECK(env.k1(env.I1.lo) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(env.k1(env.I1.hi) >= 0.25 - 1e-12);
  CHECK(env.I1.lo == doctest::Approx(0.78).epsilon(1e-2));
  CHECK(env.I1.hi == 0.9151);
}

TEST_CASE("default I1 regime formulas and remark containments") {
  // B = 2 endpoint against the remark bounds
  Interval I1 = default_I1(ProblemId::second_order(2.0));
  CHECK(I1.lo ==
        doctest::Approx(1.0 - std::log((1.0 + 3.0 * std::exp(2.0)) / 4.0) / 2.0)
            .epsilon(1e-14));
  for (int i = 0; i < 20; ++i) {
    double B = 2.0 * (i + 1) / 20.0;
    Interval iv = default_I1(ProblemId::second_order(B));
    CHECK(iv.lo >= 3.0 / 25.0 - 1e-12);
    CHECK(iv.lo <= 0.25 + 1e-12);
    CHECK(iv.hi >= 13.0 / 25.0 - 1e-12);
    CHECK(iv.hi <= 0.75 + 1e-12);
    Interval ivm = default_I1(ProblemId::second_order(-B));
    CHECK(ivm.lo >= 0.25 - 1e-12);
    CHECK(ivm.lo <= 12.0 / 25.0 + 1e-12);
    CHECK(ivm.hi >= 0.75 - 1e-12);
    CHECK(ivm.hi <= 22.0 / 25.0 + 1e-12);
  }
  CHECK_THROWS_AS(default_I1(ProblemId::second_order(3.0)), UnsupportedProblem);
  CHECK_THROWS_AS(envelope_closed_form(ProblemId::second_order(-7.0)),
                  UnsupportedProblem);
}

TEST_CASE("sandwich property on a 200x200 grid") {
  for (const auto& pid : catalog()) {
    Envelope env = envelope_closed_form(pid);
    NormalizedKernel nk(kernel_for(pid));
    for (int i = 1; i < 200; ++i) {
      double t = i / 200.0;
      double k1t = env.k1(t), k2t = env.k2(t);
      for (int j = 0; j <= 200; ++j) {
        double u = nk.value(t, j / 200.0);
        CHECK(u >= k1t - 1e-10);
        CHECK(u <= k2t + 1e-10);
      }
    }
  }
}

TEST_CASE("m1 attained at I1 endpoints for second-order entries") {
  for (double B : {0.0, kBpos, kBneg}) {
    Envelope env = envelope_closed_form(ProblemId::second_order(B));
    CHECK(env.k1(env.I1.lo) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(env.k1(env.I1.hi) == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("monotone structure of k1 for B=0") {
  Envelope env = envelope_closed_form(ProblemId::second_order(0.0));
  for (int i = 0; i < 100; ++i) {
    double a = i / 200.0, b = (i + 1) / 200.0;  // within [0, 1/2]
    CHECK(env.k1(a) <= env.k1(b) + 1e-15);
    CHECK(env.k1(1.0 - a) <= env.k1(1.0 - b) + 1e-15);
  }
}

TEST_CASE("K2 = 1 for the tabulated second-order drifts, attained at t=1") {
  for (double B : {0.0, kBpos, kBneg, kB2pi}) {
    Envelope env = envelope_closed_form(ProblemId::second_order(B));
    CHECK(env.K2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(env.k2(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("numeric envelope agrees with closed forms") {
  // B=0: K2 within 1e-6 of 1 on a 256 grid
  {
    Envelope num = envelope_numeric(kernel_for(ProblemId::second_order(0.0)));
    CHECK(num.K2 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(num.K1 == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(num.m1 == doctest::Approx(0.25).epsilon(1e-6));
  }
  // fourth order: K1 within 1e-6 of 1/16
  {
    Envelope num = envelope_numeric(kernel_for(ProblemId::fourth_order()));
    CHECK(num.K1 == doctest::Approx(1.0 / 16.0).epsilon(1e-6));
    CHECK(num.K2 == doctest::Approx(1.0 / 12.0).epsilon(1e-6));
    CHECK(num.m1 == doctest::Approx(1.0 / 27.0).epsilon(1e-6));
  }
}

TEST_CASE("numeric k1 cross-validates the certified bounds") {
  for (const auto& pid : catalog()) {
    Envelope closed = envelope_closed_form(pid);
    Envelope num = envelope_numeric(kernel_for(pid), {128});
    for (int i = 1; i < 64; ++i) {
      double t = i / 64.0;
      if (closed.k1_is_lower_bound) {
        // certified lower bound: the true minimum cannot undershoot it
        CHECK(num.k1(t) >= closed.k1(t) - 1e-8);
      } else {
        // exact envelope: the numeric minimum cannot exceed it
        CHECK(num.k1(t) <= closed.k1(t) + 1e-8);
        CHECK(num.k1(t) >= closed.k1(t) - 1e-8);
      }
    }
  }
}

}  // TEST_SUITE
