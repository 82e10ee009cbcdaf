#include <catch_amalgamated.hpp>

#include <cmath>

#include "symspace/growth.hpp"

using namespace symspace;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> sizes(int lo, int hi) {
  std::vector<double> n;
  for (int k = lo; k <= hi; ++k) n.push_back(std::ldexp(1.0, k));
  return n;
}

}  // namespace

TEST_CASE("power growth is divergent, constants are bounded") {
  const auto n = sizes(10, 16);
  std::vector<double> grow, flat;
  for (double v : n) {
    grow.push_back(std::pow(v, 0.1));
    flat.push_back(2.0 + 1e-3 * std::sin(v));
  }
  CHECK(classify_growth(n, grow).classification == Classification::divergent);
  CHECK(classify_growth(n, flat).classification == Classification::bounded);
}

TEST_CASE("three values are inconclusive") {
  const auto n = sizes(10, 12);
  const std::vector<double> v{1.0, 1.0, 1.0};
  CHECK(classify_growth(n, v).classification == Classification::inconclusive);
}

TEST_CASE("two growth steps do not make a divergent run") {
  const auto n = sizes(10, 15);
  const std::vector<double> v{1.0, 1.2, 1.44, 1.44, 1.44, 1.44};
  const auto g = classify_growth(n, v);
  CHECK(g.classification == Classification::bounded);
  CHECK(g.longest_run == 2);
}

TEST_CASE("growth is measured per doubling") {
  const auto n = sizes(10, 16);
  std::vector<double> v;
  for (double x : n) v.push_back(std::pow(x, 0.05));  // 3.5% per doubling
  CHECK(classify_growth(n, v).classification == Classification::bounded);
  CHECK(classify_growth(n, v, GrowthRule{0.03, 3}).classification == Classification::divergent);
}

TEST_CASE("log-log fit recovers a power of ln n") {
  const auto n = sizes(10, 18);
  std::vector<double> v;
  for (double x : n) v.push_back(3.0 * std::pow(std::log(x), 0.25));
  const auto fit = fit_loglog(n, v);
  CHECK_THAT(fit.slope, WithinAbs(0.25, 1e-12));
  CHECK_THAT(fit.residual, WithinAbs(0.0, 1e-12));
}

TEST_CASE("classification names") {
  CHECK(to_string(Classification::bounded) == "bounded");
  CHECK(to_string(Classification::divergent) == "divergent");
  CHECK(to_string(Classification::inconclusive) == "inconclusive");
}
