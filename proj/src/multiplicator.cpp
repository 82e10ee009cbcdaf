#include "symspace/multiplicator.hpp"

#include <algorithm>
#include <cmath>

#include "symspace/analytic.hpp"
#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"
#include "symspace/parallel.hpp"
#include "symspace/tensor.hpp"

namespace symspace {

std::vector<StepFunction> disjoint_copies(const StepFunction& y, std::size_t m) {
  if (m == 0) throw InvalidArgument("need at least one copy");
  std::vector<Cell> cells = y.cells();
  const double dm = static_cast<double>(m);
  for (Cell& c : cells) c.measure /= dm;
  return std::vector<StepFunction>(m, StepFunction(std::move(cells)));
}

StepFunction disjoint_sum(const std::vector<double>& coeffs, const StepFunction& y) {
  if (coeffs.empty()) throw InvalidArgument("need at least one coefficient");
  const double dm = static_cast<double>(coeffs.size());
  std::vector<Cell> cells;
  cells.reserve(coeffs.size() * y.size());
  for (double a : coeffs) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw InvalidArgument("coefficients must be >= 0");
    if (a == 0.0) continue;
    for (const Cell& c : y.cells()) cells.push_back({c.measure / dm, a * c.value});
  }
  return StepFunction(std::move(cells));
}

double disjoint_sum_norm(const std::vector<double>& coeffs, const SpaceSpec& space,
                         const StepFunction& y) {
  const double ny = norm_value(rearrange(y), space);
  if (!(ny > 0.0)) throw InvalidArgument("candidate has zero norm");
  return norm_value(rearrange(disjoint_sum(coeffs, y)), space) / ny;
}

double disjoint_sum_norm_sup(const std::vector<double>& coeffs, const SpaceSpec& space,
                             const std::vector<NamedFunction>& candidates) {
  std::vector<double> vals(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    vals[i] = disjoint_sum_norm(coeffs, space, candidates[i].f);
  });
  return vals.empty() ? 0.0 : *std::max_element(vals.begin(), vals.end());
}

double block_norm(const std::vector<double>& coeffs, const SpaceSpec& space) {
  const double dm = static_cast<double>(coeffs.size());
  std::vector<Cell> cells;
  for (double a : coeffs) {
    if (a > 0.0) cells.push_back({1.0 / dm, a});
  }
  return norm_value(rearrange(StepFunction(std::move(cells))), space);
}

DisjointSumReport disjoint_sum_constant(const SpaceSpec& space, std::size_t m_max,
                                        std::size_t trials, std::uint64_t seed,
                                        std::size_t grid_n) {
  validate(space);
  if (m_max < 2) throw InvalidArgument("m_max must be at least 2");
  const StockFamilyConfig config = stock_config_for(space, grid_n);
  auto candidates = stock_family(config);
  // indicators of tiny sets add nothing here and underflow when split
  std::erase_if(candidates, [](const NamedFunction& c) {
    return c.f.size() == 1 && c.f.cells()[0].measure < 1e-30;
  });
  std::vector<double> cand_norm(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    cand_norm[i] = norm_value(rearrange(candidates[i].f), space);
  }
  Rng rng(seed);
  DisjointSumReport out;
  for (std::size_t m = 2; m <= m_max; m *= 2) {
    std::vector<std::pair<std::string, std::vector<double>>> coeff_sets;
    coeff_sets.push_back({"ones", std::vector<double>(m, 1.0)});
    for (double a : {reciprocal(config.q) + config.delta, 0.0, -0.5}) {
      std::vector<double> c(m);
      for (std::size_t i = 0; i < m; ++i) {
        c[i] = psi_eval(SingularPowerLog{config.p, a},
                        static_cast<double>(i + 1) / static_cast<double>(m));
      }
      coeff_sets.push_back({"psi_" + format_short(a), std::move(c)});
    }
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<double> c(m);
      for (double& v : c) v = rng.uniform();
      const double total = compensated_sum(c);
      for (double& v : c) v /= total;
      coeff_sets.push_back({"random_" + std::to_string(t), std::move(c)});
    }
    const std::size_t nc = candidates.size();
    std::vector<double> ratios(coeff_sets.size() * nc);
    parallel_for(ratios.size(), [&](std::size_t k) {
      const auto& [name, coeffs] = coeff_sets[k / nc];
      const std::size_t j = k % nc;
      const double sum = norm_value(rearrange(disjoint_sum(coeffs, candidates[j].f)), space);
      ratios[k] = sum / cand_norm[j] / block_norm(coeffs, space);
    });
    std::size_t best = 0;
    for (std::size_t k = 1; k < ratios.size(); ++k) {
      if (ratios[k] > ratios[best]) best = k;
    }
    out.levels.push_back(
        {m, ratios[best], coeff_sets[best / nc].first + "/" + candidates[best % nc].name});
    out.constant = std::max(out.constant, ratios[best]);
  }
  return out;
}

MultiplicatorBracket multiplicator_bracket(const StepFunction& x, const SpaceSpec& space,
                                           std::size_t grid_n, std::uint64_t seed) {
  validate(space);
  MultiplicatorBracket out;
  const RearrangementProfile px = rearrange(x);
  if (px.empty()) return out;
  StockFamilyConfig config = stock_config_for(space, grid_n);
  config.seed = seed;
  const auto candidates = stock_family(config);
  const TensorFactor fx(px);
  std::vector<double> ratios(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const TensorFactor fy(candidates[i].f);
    const double ny = norm_value(fy.profile, space);
    ratios[i] = ny > 0.0 ? tensor_norm(fx, fy, space).lower_bracket / ny : 0.0;
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (ratios[i] > ratios[best]) best = i;
  }
  out.lower = ratios[best];
  out.lower_argmax = candidates[best].name;

  // psi(t) = ||sigma_t||, tabulated in log-log and interpolated linearly
  constexpr std::size_t kTable = 64;
  const double lo = std::min(std::log(px.breakpoints().front()), -1.0);
  std::vector<double> lt(kTable);
  std::vector<double> lpsi(kTable);
  for (std::size_t j = 0; j < kTable; ++j) {
    lt[j] = lo * (1.0 - static_cast<double>(j) / (kTable - 1));
    lpsi[j] = std::log(dilation_norm(space, std::exp(lt[j])));
  }
  auto psi = [&](double t) {
    const double l = std::log(t);
    if (l <= lt.front()) return std::exp(lpsi.front());
    if (l >= lt.back()) return std::exp(lpsi.back());
    const auto it = std::upper_bound(lt.begin(), lt.end(), l);
    const auto j = static_cast<std::size_t>(it - lt.begin());
    const double w = (l - lt[j - 1]) / (lt[j] - lt[j - 1]);
    return std::exp(lpsi[j - 1] + w * (lpsi[j] - lpsi[j - 1]));
  };
  out.upper = 2.0 * lambda_norm_value(px, psi);

  const BoydEstimate boyd = boyd_indices(space);
  out.boyd_lower = boyd.lower;
  if (!boyd.flagged && boyd.lower > 0.0 && boyd.lower < 1.0) {
    const double p = 1.0 / boyd.lower;
    out.p_bound = lz_norm_value(px, p, p, 0.0) / 2.0;
  }
  return out;
}

SpaceSpec multiplicator_space(const SpaceSpec& space) {
  validate(space);
  if (const auto* lam = std::get_if<LambdaSpace>(&space)) {
    if (const auto* g = std::get_if<PowerWeight>(&lam->weight)) return lambda_space(*g);
    if (const auto* g = std::get_if<LogDampedWeight>(&lam->weight)) {
      return lambda_space(PowerWeight{g->alpha});
    }
    const auto& g = std::get<PowerLogWeight>(lam->weight);
    if (g.alpha > 0.0) return lambda_space(g);
    return lambda_space(PowerWeight{1.0 / g.p});
  }
  const auto& lz = std::get<LorentzZygmund>(space);
  if (lz.alpha == 0.0 && lz.p <= lz.q) return lp_space(lz.p);
  throw PreconditionViolation("no closed form for the multiplicator space of " + describe(space));
}

std::vector<FundamentalRow> check_fundamental_identity(const SpaceSpec& space,
                                                       const std::vector<double>& t_grid,
                                                       std::size_t grid_n) {
  validate(space);
  const auto candidates = stock_family(stock_config_for(space, grid_n));
  std::vector<RearrangementProfile> profiles;
  std::vector<double> norms;
  for (const auto& c : candidates) {
    profiles.push_back(rearrange(c.f));
    norms.push_back(norm_value(profiles.back(), space));
  }
  std::vector<FundamentalRow> rows(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t k) {
    const double t = t_grid[k];
    if (!(t > 0.0 && t <= 1.0)) throw InvalidArgument("t must lie in (0,1]");
    const RearrangementProfile chi = rearrange(StepFunction::indicator(t));
    FundamentalRow row;
    row.t = t;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      if (!(norms[i] > 0.0)) continue;
      const double r = norm_value(tensor_rearrange(chi, profiles[i]), space) / norms[i];
      if (r > row.stock_sup) {
        row.stock_sup = r;
        row.argmax = candidates[i].name;
      }
    }
    row.dilation = dilation_norm(space, t);
    row.ratio = row.stock_sup / row.dilation;
    rows[k] = row;
  });
  return rows;
}

std::vector<TransferRow> check_dilation_transfer(const SpaceSpec& space,
                                                 const std::vector<double>& t_grid,
                                                 double tol) {
  const SpaceSpec mult = multiplicator_space(space);
  std::vector<TransferRow> rows;
  for (double t : t_grid) {
    TransferRow r;
    r.t = t;
    r.on_space = dilation_norm(space, t);
    r.on_multiplicator = dilation_norm(mult, t);
    const double inv = dilation_norm(space, 1.0 / t);
    r.inverse_bound = 1.0 / inv;
    if (t <= 1.0) {
      r.holds = std::fabs(r.on_multiplicator - r.on_space) <= tol * r.on_space;
    } else {
      r.holds = r.inverse_bound <= r.on_multiplicator * (1.0 + tol) &&
                r.on_multiplicator <= r.on_space * (1.0 + tol);
    }
    r.product = r.on_multiplicator * inv;
    r.ratio = r.on_multiplicator / r.on_space;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace symspace
