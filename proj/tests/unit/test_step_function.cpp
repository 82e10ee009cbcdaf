#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "symspace/errors.hpp"
#include "symspace/stock.hpp"
#include "symspace/step_function.hpp"

using namespace symspace;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

StepFunction sample() { return StepFunction({{0.2, 1.0}, {0.3, 3.0}, {0.1, -2.0}}); }

// Brute force: measure where |x| exceeds tau.
double brute_distribution(const StepFunction& x, double tau) {
  double m = 0.0;
  for (const auto& c : x.cells()) {
    if (std::fabs(c.value) > tau) m += c.measure;
  }
  return m;
}

}  // namespace

TEST_CASE("rearrangement orders values and accumulates measures") {
  const auto r = rearrange(sample());
  REQUIRE(r.size() == 3);
  CHECK(r.values() == std::vector<double>{3.0, 2.0, 1.0});
  CHECK_THAT(r.breakpoints()[0], WithinAbs(0.3, 1e-15));
  CHECK_THAT(r.breakpoints()[1], WithinAbs(0.4, 1e-15));
  CHECK_THAT(r.breakpoints()[2], WithinAbs(0.6, 1e-15));
  CHECK(r.support() == r.breakpoints().back());
  CHECK(r.sup() == 3.0);
}

TEST_CASE("rearrangement is left-continuous and vanishes past the support") {
  const auto r = rearrange(sample());
  CHECK(r(0.3) == 3.0);
  CHECK(r(0.3 + 1e-12) == 2.0);
  CHECK(r(0.6) == 1.0);
  CHECK(r(0.7) == 0.0);
}

TEST_CASE("equal values coalesce and zero values drop") {
  const auto r = rearrange(StepFunction({{0.1, 2.0}, {0.2, 0.0}, {0.3, -2.0}}));
  REQUIRE(r.size() == 1);
  CHECK_THAT(r.measures()[0], WithinAbs(0.4, 1e-15));
}

TEST_CASE("rearrangement is equimeasurable on random functions") {
  for (const auto& x : random_step_functions(200, 64, 99)) {
    const auto r = rearrange(x);
    for (const auto& c : x.cells()) {
      const double tau = std::fabs(c.value);
      CHECK_THAT(distribution(r, tau), WithinAbs(brute_distribution(x, tau), 1e-12));
      CHECK_THAT(distribution(x, tau), WithinAbs(brute_distribution(x, tau), 1e-12));
    }
  }
}

TEST_CASE("the profile does not depend on cell order") {
  auto cells = random_step_functions(1, 300, 5).front().cells();
  const auto a = rearrange(StepFunction(cells));
  std::mt19937 shuffle(3);
  std::shuffle(cells.begin(), cells.end(), shuffle);
  const auto b = rearrange(StepFunction(cells));
  CHECK(a.values() == b.values());
  CHECK(a.measures() == b.measures());
  CHECK(a.breakpoints() == b.breakpoints());
}

TEST_CASE("average rearrangement") {
  const auto r = rearrange(sample());
  CHECK_THAT(average_rearrangement(r, 0.4), WithinRel((0.9 + 0.2) / 0.4, 1e-14));
  CHECK_THAT(average_rearrangement(r, 0.1), WithinRel(3.0, 1e-14));
  CHECK_THAT(average_rearrangement(r, 1.0), WithinRel(1.3, 1e-14));
  CHECK_THAT(r.integral(), WithinRel(sample().integral(), 1e-14));
}

TEST_CASE("dilation scales the support and truncates at 1") {
  const auto ind = rearrange(StepFunction::indicator(0.25, 2.0));
  CHECK_THAT(dilate(ind, 2.0).support(), WithinAbs(0.5, 1e-15));
  CHECK_THAT(dilate(ind, 0.5).support(), WithinAbs(0.125, 1e-15));
  CHECK_THAT(dilate(ind, 8.0).support(), WithinAbs(1.0, 1e-15));
  CHECK(dilate(ind, 8.0).sup() == 2.0);
}

TEST_CASE("equimeasurability distance") {
  const auto x = rearrange(sample());
  CHECK(equimeasurability_distance(x, x) == 0.0);
  const auto y = rearrange(StepFunction({{0.2, 1.0}, {0.3, 3.3}, {0.1, -2.0}}));
  CHECK_THAT(equimeasurability_distance(x, y), WithinAbs(0.1, 1e-12));
}

TEST_CASE("step functions reject bad cells") {
  CHECK_THROWS_AS(StepFunction({{0.7, 1.0}, {0.7, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(StepFunction({{-0.1, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(StepFunction({{0.1, NAN}}), InvalidArgument);
}
