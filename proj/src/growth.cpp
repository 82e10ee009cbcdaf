#include "symspace/growth.hpp"

#include <cmath>

#include "symspace/errors.hpp"

namespace symspace {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::bounded:
      return "bounded";
    case Classification::divergent:
      return "divergent";
    case Classification::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

GrowthSummary classify_growth(const std::vector<double>& grid_sizes,
                              const std::vector<double>& values, const GrowthRule& rule) {
  if (grid_sizes.size() != values.size()) {
    throw InvalidArgument("growth classification needs one value per grid size");
  }
  GrowthSummary out;
  out.growth_per_doubling.assign(values.size(), 0.0);
  std::size_t run = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(grid_sizes[i] > grid_sizes[i - 1])) {
      throw InvalidArgument("grid sizes must increase");
    }
    const double doublings = std::log2(grid_sizes[i] / grid_sizes[i - 1]);
    double g;
    if (std::isinf(values[i]) && !std::isinf(values[i - 1])) {
      g = kInf;
    } else if (values[i - 1] > 0.0 && std::isfinite(values[i - 1])) {
      g = std::pow(values[i] / values[i - 1], 1.0 / doublings) - 1.0;
    } else {
      g = 0.0;
    }
    out.growth_per_doubling[i] = g;
    run = g > rule.per_doubling ? run + 1 : 0;
    out.longest_run = std::max(out.longest_run, run);
  }
  if (out.longest_run >= rule.consecutive) {
    out.classification = Classification::divergent;
  } else if (values.size() >= rule.consecutive + 1) {
    out.classification = Classification::bounded;
  } else {
    out.classification = Classification::inconclusive;
  }
  return out;
}

LinearFit fit_loglog(const std::vector<double>& grid_sizes, const std::vector<double>& values) {
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < values.size() && i < grid_sizes.size(); ++i) {
    if (values[i] > 0.0 && std::isfinite(values[i]) && grid_sizes[i] > kE) {
      x.push_back(std::log(std::log(grid_sizes[i])));
      y.push_back(std::log(values[i]));
    }
  }
  return least_squares(x, y);
}

}  // namespace symspace
