#include <catch_amalgamated.hpp>

#include <cmath>

#include "symspace/lattice.hpp"
#include "symspace/spaces.hpp"
#include "symspace/stock.hpp"

using namespace symspace;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("lattice index and value are inverse on the lattice") {
  for (std::int64_t k : {-5000, -1, 0, 1, 256, 99999}) {
    CHECK(lattice_index(lattice_value(k)) == k);
    CHECK(lattice_index(lattice_value(k) * 1.0001) == k);
  }
  CHECK_THAT(lattice_value(256), WithinRel(2.0, 1e-14));
}

TEST_CASE("lattice profiles bracket the original pointwise") {
  for (const auto& x : random_step_functions(5, 200, 17)) {
    const auto r = rearrange(x);
    const auto lat = to_lattice(r);
    const auto lo = to_profile(lat, LatticeMode::lower);
    const auto hi = to_profile(lat, LatticeMode::upper);
    CHECK_THAT(lo.support(), WithinAbs(r.support(), 1e-12));
    double prev = 0.0;
    for (double b : r.breakpoints()) {
      const double t = 0.5 * (prev + b);
      prev = b;
      CHECK(lo(t) <= r(t) * (1.0 + 1e-12));
      CHECK(r(t) <= hi(t) * (1.0 + 1e-12));
      CHECK(hi(t) <= lo(t) * std::exp2(1.0 / 128.0));
    }
  }
}

TEST_CASE("lattice product conserves mass") {
  const auto xs = random_step_functions(2, 100, 23);
  const auto a = to_lattice(rearrange(xs[0]));
  const auto b = to_lattice(rearrange(xs[1]));
  const auto ab = lattice_tensor(a, b);
  double ma = 0, mb = 0, mab = 0;
  for (double m : a.mass) ma += m;
  for (double m : b.mass) mb += m;
  for (double m : ab.mass) mab += m;
  CHECK_THAT(mab, WithinRel(ma * mb, 1e-12));
  CHECK(ab.span == a.span + b.span);
}
