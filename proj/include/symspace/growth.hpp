#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symspace/numeric.hpp"

namespace symspace {

// A sequence indexed by grid size n is divergent when it grows by more than
// `per_doubling` per doubling of n over `consecutive` consecutive doublings.
// Steps spanning several doublings are normalized per doubling.
struct GrowthRule {
  double per_doubling = 0.05;
  std::size_t consecutive = 3;
};

enum class Classification { bounded, divergent, inconclusive };

std::string to_string(Classification c);

struct GrowthSummary {
  Classification classification = Classification::inconclusive;
  std::vector<double> growth_per_doubling;  // one entry per step, first is 0
  std::size_t longest_run = 0;
};

// grid_sizes strictly increasing powers of two (any positive sizes work).
GrowthSummary classify_growth(const std::vector<double>& grid_sizes,
                              const std::vector<double>& values,
                              const GrowthRule& rule = {});

// Least squares of ln value against ln ln n.
LinearFit fit_loglog(const std::vector<double>& grid_sizes, const std::vector<double>& values);

}  // namespace symspace
