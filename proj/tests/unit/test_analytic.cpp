#include <catch_amalgamated.hpp>

#include <cmath>

#include "symspace/analytic.hpp"
#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"

using namespace symspace;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("singular power-log function") {
  const SingularPowerLog f{2.0, 0.0};
  CHECK_THAT(psi_eval(f, 0.25), WithinRel(2.0, 1e-15));
  const SingularPowerLog g{2.0, 1.0};
  CHECK_THAT(psi_eval(g, std::exp(-3.0)), WithinRel(std::exp(1.5) / 4.0, 1e-14));
  CHECK_THAT(psi_log_at(g, 3.0), WithinAbs(1.5 - std::log(4.0), 1e-14));
}

TEST_CASE("distribution of the singular function inverts it on its monotone part") {
  for (const SingularPowerLog f : {SingularPowerLog{2.0, 0.0}, SingularPowerLog{3.0, -1.0},
                                   SingularPowerLog{2.0, 0.3}}) {
    for (double u : {1e-9, 1e-4, 0.01, 0.3}) {
      CHECK_THAT(psi_distribution(f, psi_eval(f, u) * (1.0 - 1e-12)), WithinRel(u, 1e-6));
    }
  }
}

TEST_CASE("log-damped weight needs a large enough constant") {
  CHECK_THROWS_AS(validate(Weight{LogDampedWeight{0.5, 2.0}}), ConstraintViolation);
  CHECK_THROWS_AS(validate(Weight{LogDampedWeight{1.5, 100.0}}), InvalidArgument);
  CHECK_NOTHROW(validate(Weight{LogDampedWeight{0.5, std::exp(2.0) * 1.01}}));
  CHECK(is_concave(Weight{LogDampedWeight{0.5, std::exp(3.0)}}));
  CHECK(is_concave(Weight{LogDampedWeight{0.3, std::exp(2.3)}}));
  CHECK(is_concave(Weight{PowerLogWeight{2.0, 0.5}}));
}

// w'' has the sign of a(a-1)L^2 + (2a-1)L + 2 with L = ln(C/s), so concavity on
// (0,1] needs ln C above the larger root; exp(1/(1-a)) alone is not enough.
TEST_CASE("log-damped weight concavity follows the quadratic in ln(C/s)") {
  for (double a : {0.3, 0.5, 0.7}) {
    const double b = 2.0 * a - 1.0;
    const double root = (b + std::sqrt(b * b + 8.0 * a * (1.0 - a))) / (2.0 * a * (1.0 - a));
    CHECK(is_concave(Weight{LogDampedWeight{a, std::exp(root + 0.05)}}));
    if (root - 0.3 > 1.0 / (1.0 - a)) {
      CHECK_NOTHROW(validate(Weight{LogDampedWeight{a, std::exp(root - 0.3)}}));
      CHECK_FALSE(is_concave(Weight{LogDampedWeight{a, std::exp(root - 0.3)}}));
    }
  }
  CHECK_FALSE(is_concave(Weight{LogDampedWeight{0.3, std::exp(2.0)}}));
  CHECK_FALSE(is_concave(Weight{LogDampedWeight{0.7, std::exp(4.0)}}));
}

TEST_CASE("log weight ratio agrees with direct evaluation") {
  const Weight ws[] = {PowerWeight{0.4}, PowerLogWeight{3.0, -0.5}, LogDampedWeight{0.5, 30.0}};
  for (const auto& w : ws) {
    for (double s : {1e-6, 0.01, 0.2}) {
      for (double v : {0.5, 2.0, 4.0}) {
        const double direct = std::log(weight_eval(w, v * s) / weight_eval(w, s));
        CHECK_THAT(weight_log_ratio(w, -std::log(s), std::log(v)), WithinAbs(direct, 1e-12));
      }
      CHECK_THAT(weight_log(w, std::log(s)), WithinAbs(std::log(weight_eval(w, s)), 1e-12));
    }
  }
}

TEST_CASE("grid samples bracket a decreasing function") {
  const AnalyticFunction f = SingularPowerLog{2.0, 0.0};
  const auto lo = sample_to_grid(f, 64, SampleMode::lower);
  const auto hi = sample_to_grid(f, 64, SampleMode::upper);
  REQUIRE(lo.size() == 64);
  for (std::size_t i = 0; i < 64; ++i) {
    CHECK(lo.cells()[i].value <= hi.cells()[i].value);
  }
  CHECK_THAT(lo.cells()[0].value, WithinRel(8.0, 1e-15));
}
