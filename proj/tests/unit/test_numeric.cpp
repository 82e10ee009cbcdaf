#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "symspace/numeric.hpp"

using namespace symspace;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gauss-legendre rules integrate polynomials of degree 2n-1 exactly") {
  for (std::size_t n : {2u, 5u, 16u, 32u}) {
    const auto& g = gauss_legendre(n);
    REQUIRE(g.nodes.size() == n);
    double total = 0.0;
    double moment = 0.0;
    const int deg = static_cast<int>(2 * n - 2);  // even, so the moment is nonzero
    for (std::size_t i = 0; i < n; ++i) {
      total += g.weights[i];
      moment += g.weights[i] * std::pow(g.nodes[i], deg);
    }
    CHECK_THAT(total, WithinAbs(2.0, 1e-14));
    CHECK_THAT(moment, WithinRel(2.0 / (deg + 1), 1e-13));
    CHECK(std::is_sorted(g.nodes.begin(), g.nodes.end()));
  }
}

TEST_CASE("compensated summation recovers cancelled terms") {
  const std::vector<double> v{1.0, 1e100, 1.0, -1e100};
  CHECK(compensated_sum(v) == 2.0);
  CompensatedSum s;
  for (int i = 0; i < 10; ++i) s.add(0.1);
  CHECK(s.value() == 1.0);
}

TEST_CASE("log-sum-exp does not overflow") {
  LogSumExp l;
  l.add(1000.0);
  l.add(1000.0);
  CHECK_THAT(l.value(), WithinAbs(1000.0 + std::log(2.0), 1e-12));
  LogSumExp empty;
  CHECK(empty.value() == -kInf);
}

TEST_CASE("seeded uniform stream is reproducible and lies in (0, 1]") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x > 0.0);
    CHECK(x <= 1.0);
    differs = differs || x != c.uniform();
  }
  CHECK(differs);
}

TEST_CASE("doubles print with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_short(0.6) == "0.6");
}

TEST_CASE("least squares recovers an exact line") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  const auto fit = least_squares(x, y);
  CHECK_THAT(fit.slope, WithinAbs(2.0, 1e-14));
  CHECK_THAT(fit.intercept, WithinAbs(1.0, 1e-13));
  CHECK_THAT(fit.residual, WithinAbs(0.0, 1e-13));
}
