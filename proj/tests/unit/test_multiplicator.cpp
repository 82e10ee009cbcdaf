#include <catch_amalgamated.hpp>

#include <cmath>

#include "symspace/errors.hpp"
#include "symspace/multiplicator.hpp"
#include "symspace/numeric.hpp"

using namespace symspace;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("disjoint copies split the distribution") {
  const auto y = StepFunction({{0.5, 2.0}, {0.25, 1.0}});
  const auto copies = disjoint_copies(y, 4);
  REQUIRE(copies.size() == 4);
  for (const auto& c : copies) {
    CHECK_THAT(c.total_measure(), WithinAbs(0.1875, 1e-15));
  }
}

TEST_CASE("disjoint sums in L_p factor through the coefficients") {
  const auto y = StepFunction({{0.5, 2.0}, {0.25, 1.0}});
  const std::vector<double> a{1.0, 2.0, 3.0};
  const double expect = std::sqrt((1.0 + 4.0 + 9.0) / 3.0);
  CHECK_THAT(disjoint_sum_norm(a, lp_space(2.0), y), WithinRel(expect, 1e-12));
  CHECK_THAT(block_norm(a, lp_space(2.0)), WithinRel(expect, 1e-12));
}

TEST_CASE("multiplicator spaces in closed form") {
  const auto m1 = multiplicator_space(lpq_space(2.0, 4.0));
  const auto* lz = std::get_if<LorentzZygmund>(&m1);
  REQUIRE(lz != nullptr);
  CHECK(lz->p == 2.0);
  CHECK(lz->q == 2.0);
  const auto m2 = multiplicator_space(lambda_space(LogDampedWeight{0.5, std::exp(3.0)}));
  const auto* lam = std::get_if<LambdaSpace>(&m2);
  REQUIRE(lam != nullptr);
  REQUIRE(std::holds_alternative<PowerWeight>(lam->weight));
  CHECK(std::get<PowerWeight>(lam->weight).gamma == 0.5);
  CHECK_THROWS_AS(multiplicator_space(lpq_space(4.0, 2.0)), PreconditionViolation);
}

TEST_CASE("disjoint-sum constant of L_p is one") {
  const auto rep = disjoint_sum_constant(lp_space(2.0), 8, 10, 7);
  REQUIRE(rep.levels.size() == 3);
  CHECK_THAT(rep.constant, WithinAbs(1.0, 1e-10));
}

TEST_CASE("multiplicator bracket in L_2 contains the L_2 norm") {
  const auto x = StepFunction({{0.1, 5.0}, {0.4, 1.0}});
  const auto b = multiplicator_bracket(x, lp_space(2.0), 256);
  const double n2 = std::sqrt(0.1 * 25.0 + 0.4);
  CHECK(b.lower <= n2 * (1.0 + 1e-9));
  CHECK(n2 <= b.upper * (1.0 + 1e-9));
  CHECK(b.lower <= b.upper);
}

TEST_CASE("fundamental identity for a power weight") {
  const auto rows = check_fundamental_identity(lambda_space(PowerWeight{0.5}), {1.0, 0.25, 1.0 / 64}, 256);
  for (const auto& r : rows) {
    CHECK(r.ratio <= 1.0 + 1e-9);
    CHECK(r.ratio >= 0.9);
  }
}
