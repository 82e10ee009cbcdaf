#include <catch_amalgamated.hpp>

#include <cmath>

#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"
#include "symspace/stock.hpp"
#include "symspace/tensor.hpp"

using namespace symspace;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double brute_product_distribution(const StepFunction& x, const StepFunction& y, double tau) {
  double m = 0.0;
  for (const auto& a : x.cells())
    for (const auto& b : y.cells())
      if (std::fabs(a.value * b.value) > tau) m += a.measure * b.measure;
  return m;
}

}  // namespace

TEST_CASE("product of indicators is an indicator") {
  const auto r = tensor_rearrange(StepFunction::indicator(0.25, 2.0), StepFunction::indicator(0.5, 3.0));
  REQUIRE(r.size() == 1);
  CHECK(r.sup() == 6.0);
  CHECK_THAT(r.support(), WithinAbs(0.125, 1e-16));
}

TEST_CASE("product distribution matches brute force at every jump") {
  const auto xs = random_step_functions(6, 40, 31);
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    const auto r = tensor_rearrange(xs[i], xs[i + 1]);
    for (double v : r.values()) {
      CHECK_THAT(distribution(r, v), WithinAbs(brute_product_distribution(xs[i], xs[i + 1], v), 1e-12));
    }
  }
}

TEST_CASE("product is symmetric bit for bit") {
  const auto xs = random_step_functions(2, 60, 8);
  const auto a = tensor_rearrange(xs[0], xs[1]);
  const auto b = tensor_rearrange(xs[1], xs[0]);
  CHECK(a.values() == b.values());
  CHECK(a.breakpoints() == b.breakpoints());
}

TEST_CASE("lattice route brackets the exact product norm") {
  const auto xs = random_step_functions(2, 512, 12);
  const SpaceSpec spaces[] = {lpq_space(2.0, 4.0), lz_space(2.0, 4.0, -0.25), lp_space(3.0)};
  for (const auto& z : spaces) {
    const double exact = norm_value(tensor_rearrange(xs[0], xs[1]), z);
    const auto approx = tensor_norm(xs[0], xs[1], z, 1024);
    CHECK(approx.lower_bracket <= exact * (1.0 + 1e-12));
    CHECK(exact <= approx.upper_bracket * (1.0 + 1e-12));
    CHECK_THAT(approx.value, WithinRel(exact, 1e-2));
    const auto direct = tensor_norm(xs[0], xs[1], z, std::size_t{1} << 20);
    CHECK_THAT(direct.value, WithinRel(exact, 1e-14));
  }
}

TEST_CASE("exact product respects its pair cap") {
  const auto xs = random_step_functions(2, 100, 1);
  CHECK_THROWS_AS(tensor_rearrange(xs[0], xs[1], 9999), ResourceLimit);
}

TEST_CASE("boundedness conditions for L_pr x L_pq -> L_ps") {
  CHECK(oneil_conditions(2, 2, 2, 2).bounded == Bounded::yes);
  CHECK(oneil_conditions(2, 4, 4, kInf).bounded == Bounded::yes);
  CHECK(oneil_conditions(2, 4, 2, 4).bounded == Bounded::yes);
  CHECK(oneil_conditions(3, 3, 3, 3).bounded == Bounded::yes);
  const auto c1 = oneil_conditions(2, 4, 4, 2);
  CHECK(c1.bounded == Bounded::no);
  CHECK(c1.failing_condition == "cond1");
  const auto c2 = oneil_conditions(2, 4, 4, 8);
  CHECK(c2.bounded == Bounded::no);
  CHECK(c2.failing_condition == "cond2");
  CHECK(oneil_conditions(0.5, 4, 4, 8).bounded == Bounded::out_of_range);
}

TEST_CASE("product target and interpolation exponents") {
  const auto t = product_target(2, 4, 4);
  CHECK(t.p == 2.0);
  CHECK(t.q == 4.0);
  CHECK_THAT(t.alpha, WithinAbs(-0.25, 1e-15));
  CHECK_FALSE(t.closure);
  CHECK(product_target(2, 4, kInf).closure);
  CHECK_FALSE(product_target(2, kInf, kInf).closure);
  const auto e = interpolation_exponents(2, 4, 8);
  CHECK_THAT(e.s, WithinAbs(4.0, 1e-14));
  CHECK_THAT(e.theta, WithinAbs(0.5, 1e-14));
}

TEST_CASE("regime checks raise precondition violations") {
  CHECK_THROWS_AS(check_product_law(2.0, 0.5, 0.0, {1024}), PreconditionViolation);
  CHECK_THROWS_AS(log_growth_witness(2, 4, 4, -0.5, {10, 11}), PreconditionViolation);
  CHECK_THROWS_AS(log_growth_witness(2, 2, 4, 0.1, {10, 11}), PreconditionViolation);
}

TEST_CASE("intersection membership needs the exponent condition") {
  const auto x = StepFunction::indicator(0.5);
  CHECK_FALSE(intersection_membership(x, x, 2.0, 4.0, 8.0).in_scope);
  const auto ok = intersection_membership(x, x, 2.0, 3.0, 4.0);
  CHECK(ok.in_scope);
  // 1/s = 1/r + 1/q - 1/p
  CHECK_THAT(ok.s, WithinRel(12.0, 1e-12));
}
