#include "symspace/tensor.hpp"

#include <algorithm>
#include <cmath>

#include "symspace/analytic.hpp"
#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"
#include "symspace/parallel.hpp"
#include "symspace/stock.hpp"

namespace symspace {

namespace {

constexpr double kTol = 1e-12;

void check_ordered(double p, double r, double q) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("p must lie in (1, inf)");
  if (!(p <= r && r <= q)) throw InvalidArgument("parameters must satisfy 1 < p <= r <= q <= inf");
}

std::vector<Cell> pair_cells(const std::vector<double>& xv, const std::vector<double>& xm,
                             const std::vector<double>& yv, const std::vector<double>& ym,
                             std::size_t cap) {
  const std::size_t n = xv.size();
  const std::size_t m = yv.size();
  if (n != 0 && m > cap / n) {
    throw ResourceLimit("product has " + std::to_string(n) + " x " + std::to_string(m) +
                        " cell pairs, above the cap of " + std::to_string(cap) +
                        "; coarsen the inputs");
  }
  std::vector<Cell> cells;
  cells.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) cells.push_back({xm[i] * ym[j], xv[i] * yv[j]});
  }
  return cells;
}

}  // namespace

RearrangementProfile tensor_rearrange(const StepFunction& x, const StepFunction& y,
                                      std::size_t pair_cap) {
  std::vector<double> xv, xm, yv, ym;
  for (const Cell& c : x.cells()) {
    xv.push_back(c.value);
    xm.push_back(c.measure);
  }
  for (const Cell& c : y.cells()) {
    yv.push_back(c.value);
    ym.push_back(c.measure);
  }
  return RearrangementProfile::from_cells(pair_cells(xv, xm, yv, ym, pair_cap));
}

RearrangementProfile tensor_rearrange(const RearrangementProfile& x,
                                      const RearrangementProfile& y, std::size_t pair_cap) {
  return RearrangementProfile::from_cells(
      pair_cells(x.values(), x.measures(), y.values(), y.measures(), pair_cap));
}

TensorFactor::TensorFactor(const RearrangementProfile& p) : profile(p), lattice(to_lattice(p)) {}

namespace {

bool use_exact(const TensorFactor& x, const TensorFactor& y, std::size_t exact_pairs) {
  const std::size_t n = x.profile.size();
  return n == 0 || y.profile.size() <= exact_pairs / n;
}

}  // namespace

NormResult tensor_norm(const TensorFactor& x, const TensorFactor& y, const SpaceSpec& z,
                       std::size_t exact_pairs, bool brackets) {
  if (use_exact(x, y, exact_pairs)) {
    return norm(tensor_rearrange(x.profile, y.profile, exact_pairs), z);
  }
  const LatticeFunction prod = lattice_tensor(x.lattice, y.lattice);
  NormResult out;
  out.value = norm_value(to_profile(prod, LatticeMode::mid), z);
  if (brackets) {
    out.lower_bracket = norm_value(to_profile(prod, LatticeMode::lower), z);
    out.upper_bracket = norm_value(to_profile(prod, LatticeMode::upper), z);
  } else {
    out.lower_bracket = out.value;
    out.upper_bracket = out.value;
  }
  out.grid_n = prod.mass.size();
  return out;
}

NormResult tensor_norm(const StepFunction& x, const StepFunction& y, const SpaceSpec& z,
                       std::size_t exact_pairs) {
  return tensor_norm(TensorFactor(x), TensorFactor(y), z, exact_pairs);
}

RearrangementProfile tensor_profile(const TensorFactor& x, const TensorFactor& y,
                                    std::size_t exact_pairs) {
  if (use_exact(x, y, exact_pairs)) return tensor_rearrange(x.profile, y.profile, exact_pairs);
  return to_profile(lattice_tensor(x.lattice, y.lattice), LatticeMode::mid);
}

std::string to_string(Bounded b) {
  switch (b) {
    case Bounded::yes:
      return "yes";
    case Bounded::no:
      return "no";
    case Bounded::out_of_range:
      return "out-of-range";
  }
  return "out-of-range";
}

BoundednessVerdict oneil_conditions(double p, double q, double r, double s) {
  BoundednessVerdict v;
  const bool in_range = p > 1.0 && std::isfinite(p) && q >= 1.0 && r >= 1.0 && s >= 1.0;
  if (!in_range) return v;
  if (std::max(q, r) > s) {
    v.bounded = Bounded::no;
    v.failing_condition = "cond1";
    return v;
  }
  if (1.0 / p + reciprocal(s) > reciprocal(q) + reciprocal(r) + kTol) {
    v.bounded = Bounded::no;
    v.failing_condition = "cond2";
    return v;
  }
  v.bounded = Bounded::yes;
  return v;
}

LorentzZygmund product_target(double p, double r, double q) {
  check_ordered(p, r, q);
  LorentzZygmund z{p, q, reciprocal(r) - 1.0 / p, false};
  z.closure = p < r && r < q && std::isinf(q);
  return z;
}

InterpolationExponents interpolation_exponents(double p, double r, double q) {
  check_ordered(p, r, q);
  InterpolationExponents e;
  if (std::isinf(r)) {
    e.s = p;  // q = r = inf: the limit of pq/r along q = r
    e.theta = 1.0;
  } else {
    e.s = std::isinf(q) ? kInf : p * q / r;
    e.theta = 1.0 - p / r;
  }
  return e;
}

ProductLawReport check_product_law(double p, double a0, double a1,
                                   const std::vector<std::size_t>& grid_sizes,
                                   std::size_t exact_pairs) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("p must lie in (1, inf)");
  if (!(a0 < 1.0 / p) || !(a1 < 1.0 / p)) {
    throw PreconditionViolation("product law needs alpha_0, alpha_1 < 1/p");
  }
  ProductLawReport out;
  out.target_alpha = a0 + a1 - 1.0 / p;
  const SingularPowerLog target{p, out.target_alpha};
  out.levels.resize(grid_sizes.size());
  parallel_for(grid_sizes.size(), [&](std::size_t idx) {
    const std::size_t n = grid_sizes[idx];
    const TensorFactor x(sample_to_grid(SingularPowerLog{p, a0}, n));
    const TensorFactor y(sample_to_grid(SingularPowerLog{p, a1}, n));
    const RearrangementProfile z = tensor_profile(x, y, exact_pairs);
    ProductLawLevel lv;
    lv.n = n;
    lv.ratio_min = kInf;
    const double window = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double t = z.breakpoints()[i];
      if (t < window) continue;
      const double a = z.values()[i];
      const double b = psi_eval(target, std::min(t, 1.0));
      lv.distance = std::max(lv.distance, std::fabs(a - b) / std::min(a, b));
      lv.ratio_min = std::min(lv.ratio_min, a / b);
      lv.ratio_max = std::max(lv.ratio_max, a / b);
    }
    out.levels[idx] = lv;
  });
  out.decreasing = true;
  for (std::size_t i = 1; i < out.levels.size(); ++i) {
    if (!(out.levels[i].distance < out.levels[i - 1].distance)) out.decreasing = false;
  }
  return out;
}

MembershipReport intersection_membership(const StepFunction& x, const StepFunction& y,
                                         double p, double r, double q,
                                         std::size_t exact_pairs) {
  MembershipReport m;
  if (!(p > 1.0 && p <= r && r <= q && std::isfinite(q))) {
    m.reason = "requires 1 < p <= r <= q < inf";
    return m;
  }
  const double inv_s = 1.0 / r + 1.0 / q - 1.0 / p;
  if (inv_s < -kTol) {
    m.reason = "requires 1/r + 1/q - 1/p >= 0; use the product target alone";
    return m;
  }
  m.in_scope = true;
  m.s = inv_s <= kTol ? kInf : 1.0 / inv_s;
  m.alpha = 1.0 / r - 1.0 / p;
  const TensorFactor fx(x);
  const TensorFactor fy(y);
  m.norm_lps = tensor_norm(fx, fy, lz_space(p, m.s, 0.0), exact_pairs).value;
  m.norm_target = tensor_norm(fx, fy, lz_space(p, q, m.alpha), exact_pairs).value;
  const double denom = lz_norm_value(fx.profile, p, r, 0.0) * lz_norm_value(fy.profile, p, q, 0.0);
  m.ratio_lps = m.norm_lps / denom;
  m.ratio_target = m.norm_target / denom;
  return m;
}

namespace {

void finish_sweep(RatioSweep& out, const GrowthRule& rule) {
  std::vector<double> sizes;
  std::vector<double> values;
  for (const auto& lv : out.levels) {
    sizes.push_back(static_cast<double>(lv.n));
    values.push_back(lv.ratio);
  }
  out.growth = classify_growth(sizes, values, rule);
  out.fit = fit_loglog(sizes, values);
}

std::size_t grid_for_level(int level) {
  if (level < 2 || level > 20) throw InvalidArgument("levels must lie in [2, 20]");
  return std::size_t{1} << level;
}

}  // namespace

RatioSweep stock_ratio_sweep(double p, double r, double q, const SpaceSpec& z,
                             const std::vector<int>& levels, const GrowthRule& rule,
                             double delta, std::uint64_t seed) {
  validate(z);
  RatioSweep out;
  for (int level : levels) {
    const std::size_t n = grid_for_level(level);
    StockFamilyConfig cx{p, r, n, delta, seed, 3, 32};
    StockFamilyConfig cy{p, q, n, delta, seed, 3, 32};
    const auto xs = stock_family(cx);
    const auto ys = stock_family(cy);
    std::vector<std::optional<TensorFactor>> fx(xs.size()), fy(ys.size());
    std::vector<double> nx(xs.size()), ny(ys.size());
    parallel_for(xs.size() + ys.size(), [&](std::size_t i) {
      if (i < xs.size()) {
        fx[i].emplace(xs[i].f);
        nx[i] = lz_norm_value(fx[i]->profile, p, r, 0.0);
      } else {
        const std::size_t j = i - xs.size();
        fy[j].emplace(ys[j].f);
        ny[j] = lz_norm_value(fy[j]->profile, p, q, 0.0);
      }
    });
    std::vector<double> ratios(xs.size() * ys.size());
    parallel_for(ratios.size(), [&](std::size_t k) {
      const std::size_t i = k / ys.size();
      const std::size_t j = k % ys.size();
      ratios[k] = tensor_norm(*fx[i], *fy[j], z, kDefaultExactPairs, false).value / (nx[i] * ny[j]);
    });
    std::size_t best = 0;
    for (std::size_t k = 1; k < ratios.size(); ++k) {
      if (ratios[k] > ratios[best]) best = k;
    }
    out.levels.push_back({level, n, ratios[best], xs[best / ys.size()].name,
                          ys[best % ys.size()].name});
  }
  finish_sweep(out, rule);
  return out;
}

RatioSweep psi_pair_sweep(double p, double r, double q, double beta,
                          const std::vector<int>& levels, double delta, const GrowthRule& rule) {
  if (!(p > 1.0) || !std::isfinite(p) || !(r >= 1.0) || !(q >= 1.0)) {
    throw InvalidArgument("need p in (1, inf) and q, r >= 1");
  }
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  const SingularPowerLog fx{p, reciprocal(r) + delta};
  const SingularPowerLog fy{p, reciprocal(q) + delta};
  const SpaceSpec target = lz_space(p, q, beta);
  RatioSweep out;
  out.levels.resize(levels.size());
  parallel_for(levels.size(), [&](std::size_t i) {
    const std::size_t n = grid_for_level(levels[i]);
    const TensorFactor x(sample_to_grid(fx, n));
    const TensorFactor y(sample_to_grid(fy, n));
    const double denom =
        lz_norm_value(x.profile, p, r, 0.0) * lz_norm_value(y.profile, p, q, 0.0);
    out.levels[i] = {levels[i], n, tensor_norm(x, y, target, kDefaultExactPairs, false).value / denom,
                     "psi_x", "psi_y"};
  });
  finish_sweep(out, rule);
  return out;
}

RatioSweep log_growth_witness(double p, double r, double q, double beta,
                              const std::vector<int>& levels, double delta,
                              const GrowthRule& rule) {
  if (!(p > 1.0 && std::isfinite(p) && p < r && r <= q)) {
    throw PreconditionViolation("witness needs 1 < p < r <= q <= inf");
  }
  const double critical = reciprocal(r) - 1.0 / p;
  if (!(beta > critical)) {
    throw PreconditionViolation("witness needs beta > 1/r - 1/p; that regime is bounded");
  }
  return psi_pair_sweep(p, r, q, beta, levels, delta, rule);
}

}  // namespace symspace
