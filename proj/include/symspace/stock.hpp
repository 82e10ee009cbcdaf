#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symspace/spaces.hpp"
#include "symspace/step_function.hpp"

namespace symspace {

struct NamedFunction {
  std::string name;
  StepFunction f;
};

// Candidate family for empirical operator norms on a space with parameters
// (p, q): deep indicators, geometric staircases, sampled singular functions
// and seeded random step functions.
struct StockFamilyConfig {
  double p = 2.0;
  double q = 2.0;
  std::size_t grid_n = 1024;
  double delta = 0.01;
  std::uint64_t seed = 7;
  std::size_t random_count = 3;
  std::size_t random_cells = 32;
};

std::vector<NamedFunction> stock_family(const StockFamilyConfig& config);

// p and q read off the space: LZ uses its own; Lambda(t^gamma) uses
// p = 1/gamma; the log-damped weight uses p = 1/alpha; q = 1 for Lambda.
StockFamilyConfig stock_config_for(const SpaceSpec& space, std::size_t grid_n);

// Twenty fixed functions used by the multiplicator checks.
std::vector<NamedFunction> test_functions();

// `count` random step functions with `cells` cells each, total measure 1.
std::vector<StepFunction> random_step_functions(std::size_t count, std::size_t cells,
                                                std::uint64_t seed);

}  // namespace symspace
