#pragma once

#include <cstdint>
#include <vector>

#include "symspace/step_function.hpp"

namespace symspace {

// Values binned on the geometric lattice r^k, r = 2^{1/256}. Bin j holds the
// measure of the set where r^{k0+j} <= value < r^{k0+j+span}.
struct LatticeFunction {
  std::int64_t k0 = 0;
  int span = 1;
  std::vector<double> mass;
};

inline constexpr int kLatticeSteps = 256;  // bins per octave

double lattice_value(std::int64_t k);
std::int64_t lattice_index(double v);

LatticeFunction to_lattice(const RearrangementProfile& x);
// Product law: masses convolve, spans add.
LatticeFunction lattice_tensor(const LatticeFunction& a, const LatticeFunction& b);

enum class LatticeMode { lower, mid, upper };

// lower/upper bound the binned function pointwise after rearrangement.
RearrangementProfile to_profile(const LatticeFunction& f, LatticeMode mode);

}  // namespace symspace
