#include "symspace/stock.hpp"

#include <algorithm>
#include <cmath>

#include "symspace/analytic.hpp"
#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"

namespace symspace {

namespace {

StepFunction staircase(double gamma, std::size_t levels) {
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < levels; ++k) {
    const auto kk = static_cast<int>(k);
    cells.push_back({std::ldexp(1.0, -kk - 1), std::exp2(kk * gamma)});
  }
  return StepFunction(std::move(cells));
}

std::string label(const char* prefix, double v) {
  return std::string(prefix) + format_short(v);
}

}  // namespace

std::vector<StepFunction> random_step_functions(std::size_t count, std::size_t cells,
                                                std::uint64_t seed) {
  Rng rng(seed);
  std::vector<StepFunction> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> values(cells);
    std::vector<double> weights(cells);
    for (std::size_t j = 0; j < cells; ++j) {
      values[j] = rng.uniform();
      weights[j] = rng.uniform();
    }
    const double total = compensated_sum(weights);
    std::vector<Cell> c(cells);
    for (std::size_t j = 0; j < cells; ++j) c[j] = {weights[j] / total, values[j]};
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<NamedFunction> stock_family(const StockFamilyConfig& config) {
  if (config.grid_n < 2) throw InvalidArgument("stock family needs grid_n >= 2");
  std::vector<NamedFunction> out;
  for (int k : {0, 1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 128, 256, 512, 1000}) {
    out.push_back({"indicator_2^-" + std::to_string(k), StepFunction::indicator(std::ldexp(1.0, -k))});
  }
  const auto levels = static_cast<std::size_t>(std::max(1.0, std::floor(std::log2(config.grid_n))));
  const double gammas[] = {1.0 / config.p, 1.0 - 1.0 / config.p};
  for (double g : gammas) out.push_back({label("staircase_", g), staircase(g, levels)});
  std::vector<double> alphas{-1.0, -0.5, 0.0};
  const double rq = reciprocal(config.q);
  for (double a : {rq + config.delta, rq - config.delta}) {
    if (std::find(alphas.begin(), alphas.end(), a) == alphas.end()) alphas.push_back(a);
  }
  for (double a : alphas) {
    out.push_back({label("psi_", a),
                   sample_to_grid(SingularPowerLog{config.p, a}, config.grid_n)});
  }
  const auto randoms =
      random_step_functions(config.random_count, config.random_cells, config.seed);
  for (std::size_t i = 0; i < randoms.size(); ++i) {
    out.push_back({"random_" + std::to_string(i), randoms[i]});
  }
  return out;
}

StockFamilyConfig stock_config_for(const SpaceSpec& space, std::size_t grid_n) {
  StockFamilyConfig c;
  c.grid_n = grid_n;
  if (const auto* lz = std::get_if<LorentzZygmund>(&space)) {
    c.p = lz->p;
    c.q = lz->q;
    return c;
  }
  const Weight& w = std::get<LambdaSpace>(space).weight;
  c.q = 1.0;
  if (const auto* g = std::get_if<PowerWeight>(&w)) c.p = 1.0 / g->gamma;
  if (const auto* g = std::get_if<PowerLogWeight>(&w)) c.p = g->p;
  if (const auto* g = std::get_if<LogDampedWeight>(&w)) c.p = 1.0 / g->alpha;
  // staircases and psi-samples need p > 1
  c.p = std::max(c.p, 1.0 + 1e-9);
  return c;
}

std::vector<NamedFunction> test_functions() {
  std::vector<NamedFunction> out;
  for (int k : {0, 1, 3, 6, 10}) {
    out.push_back({"indicator_2^-" + std::to_string(k), StepFunction::indicator(std::ldexp(1.0, -k))});
  }
  for (double g : {0.25, 0.5, 0.75}) out.push_back({label("staircase_", g), staircase(g, 10)});
  const SingularPowerLog psis[] = {{2.0, 0.0}, {2.0, -0.5}, {2.0, 0.6}, {3.0, 0.0},
                                   {3.0, -1.0}, {4.0, 0.5}, {1.5, 0.0}};
  for (const auto& f : psis) {
    out.push_back({"psi_" + format_short(f.p) + "_" + format_short(f.alpha),
                   sample_to_grid(f, 1024)});
  }
  const auto randoms = random_step_functions(5, 32, 11);
  for (std::size_t i = 0; i < randoms.size(); ++i) {
    out.push_back({"random_" + std::to_string(i), randoms[i]});
  }
  return out;
}

}  // namespace symspace
