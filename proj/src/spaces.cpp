#include "symspace/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"

namespace symspace {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::size_t kNodes = 16;

// int_0^h e^{-a s} (1 + s / l1)^c ds, in chunks from s = 0.
double damped_log_integral(double a, double c, double l1, double h) {
  const GaussRule& g = gauss_legendre(kNodes);
  CompensatedSum total;
  double start = 0.0;
  for (int chunk = 0; chunk < 100000 && start < h; ++chunk) {
    const double width = std::min(1.0 / a, l1 + start);
    const double end = std::min(h, start + width);
    const double mid = 0.5 * (start + end);
    const double half = 0.5 * (end - start);
    CompensatedSum piece;
    for (std::size_t k = 0; k < kNodes; ++k) {
      const double s = mid + half * g.nodes[k];
      piece.add(g.weights[k] * std::exp(-a * s + c * std::log1p(s / l1)));
    }
    const double pv = piece.value() * half;
    total.add(pv);
    start = end;
    // past the peak of the integrand and negligible
    if (a * (l1 + start) > c && pv < 1e-18 * total.value()) break;
  }
  return total.value();
}

// ln int_{b1 - m}^{b1} u^{a-1} ln^c(e/u) du, with log_b1 = ln b1; head cells
// start at 0.
double log_cell_weight(double log_b1, double m_over_b1, bool head, double a, double c) {
  const double l1 = 1.0 - log_b1;
  double h = kInf;
  if (!head && m_over_b1 < 1.0) h = -std::log1p(-m_over_b1);
  double J;
  if (c == 0.0) {
    J = std::isinf(h) ? 1.0 / a : -std::expm1(-a * h) / a;
  } else {
    J = damped_log_integral(a, c, l1, h);
  }
  return a * log_b1 + c * std::log(l1) + std::log(J);
}

double log_phi(double p, double alpha, double log_u) {
  return log_u / p + alpha * std::log1p(-log_u);
}

void check_lz(double p, double q) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("p must lie in (1, inf)");
  if (!(q >= 1.0) || std::isnan(q)) throw InvalidArgument("q must lie in [1, inf]");
}

double maximize_golden(const std::function<double(double)>& f, double lo, double hi) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  double best = std::max({f(lo), f(hi), f1, f2});
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::fabs(hi)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
      best = std::max(best, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
      best = std::max(best, f1);
    }
  }
  return best;
}

// sup over S >= s_min of f(S): log-spaced offsets, then golden refinement.
double sup_over_offsets(const std::function<double(double)>& f, double s_min, int j_lo,
                        int j_hi) {
  std::vector<double> grid{s_min};
  for (int j = j_lo; j <= j_hi; ++j) grid.push_back(s_min + std::pow(10.0, j / 16.0));
  std::vector<double> vals(grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = f(grid[i]);
    if (vals[i] > vals[best]) best = i;
  }
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  if (hi <= lo) return vals[best];
  return std::max(vals[best], maximize_golden(f, lo, hi));
}

}  // namespace

SpaceSpec lambda_space(const Weight& w) {
  validate(w);
  return LambdaSpace{w};
}

SpaceSpec lz_space(double p, double q, double alpha) {
  check_lz(p, q);
  return LorentzZygmund{p, q, alpha, false};
}

SpaceSpec lz0_space(double p, double q, double alpha) {
  check_lz(p, q);
  return LorentzZygmund{p, q, alpha, true};
}

SpaceSpec lpq_space(double p, double q) { return lz_space(p, q, 0.0); }
SpaceSpec lp_space(double p) { return lz_space(p, p, 0.0); }

void validate(const SpaceSpec& space) {
  std::visit(Overloaded{
                 [](const LambdaSpace& s) { validate(s.weight); },
                 [](const LorentzZygmund& s) {
                   check_lz(s.p, s.q);
                   if (!std::isfinite(s.alpha)) throw InvalidArgument("alpha must be finite");
                 },
             },
             space);
}

std::string describe(const SpaceSpec& space) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const LambdaSpace& s) {
                   os << "lambda(";
                   std::visit(Overloaded{
                                  [&](const PowerWeight& w) {
                                    os << "power,gamma=" << format_double(w.gamma);
                                  },
                                  [&](const PowerLogWeight& w) {
                                    os << "powerlog,p=" << format_double(w.p)
                                       << ",alpha=" << format_double(w.alpha);
                                  },
                                  [&](const LogDampedWeight& w) {
                                    os << "remark,alpha=" << format_double(w.alpha)
                                       << ",C=" << format_double(w.C);
                                  },
                              },
                              s.weight);
                   os << ")";
                 },
                 [&](const LorentzZygmund& s) {
                   os << (s.closure ? "lz0(" : "lz(") << "p=" << format_double(s.p)
                      << ",q=" << format_double(s.q) << ",alpha=" << format_double(s.alpha)
                      << ")";
                 },
             },
             space);
  return os.str();
}

double lz_norm_value(const RearrangementProfile& x, double p, double q, double alpha) {
  check_lz(p, q);
  if (x.empty()) return 0.0;
  const auto& v = x.values();
  const auto& m = x.measures();
  const auto& b = x.breakpoints();
  if (std::isinf(q)) {
    const double u0 = std::exp(1.0 - p * alpha);
    double best = -kInf;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double b0 = i == 0 ? 0.0 : b[i] - m[i];
      const double u = std::clamp(u0, b0, b[i]);
      const double lu = u > 0.0 ? std::log(u) : std::log(b[i]);
      best = std::max(best, std::log(v[i]) + log_phi(p, alpha, lu));
    }
    return std::exp(best);
  }
  const double a = q / p;
  const double c = q * alpha;
  LogSumExp acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lw = log_cell_weight(std::log(b[i]), m[i] / b[i], i == 0, a, c);
    acc.add(q * std::log(v[i]) + lw);
  }
  return std::exp(acc.value() / q);
}

NormResult lz_norm(const RearrangementProfile& x, double p, double q, double alpha) {
  const double v = lz_norm_value(x, p, q, alpha);
  return {v, v, v, x.size(), false};
}

NormResult lz_norm(const StepFunction& x, double p, double q, double alpha) {
  return lz_norm(rearrange(x), p, q, alpha);
}

double lz_norm_average(const RearrangementProfile& x, double p, double q, double alpha) {
  check_lz(p, q);
  if (x.empty()) return 0.0;
  const auto& v = x.values();
  const auto& b = x.breakpoints();
  const auto prefix = x.prefix_integrals();
  const double total = prefix.back();
  auto avg = [&](std::size_t i, double u) {
    const double b0 = i == 0 ? 0.0 : b[i - 1];
    const double before = i == 0 ? 0.0 : prefix[i - 1];
    return i < x.size() ? (before + v[i] * (u - b0)) / u : total / u;
  };
  const GaussRule& g = gauss_legendre(kNodes);
  if (std::isinf(q)) {
    const double u0 = std::exp(1.0 - p * alpha);
    double best = 0.0;
    auto probe = [&](std::size_t i, double u) {
      if (u > 0.0 && u <= 1.0) {
        best = std::max(best, avg(i, u) * std::exp(log_phi(p, alpha, std::log(u))));
      }
    };
    for (std::size_t i = 0; i <= x.size(); ++i) {
      const double lo = i == 0 ? 0.0 : b[i - 1];
      const double hi = i < x.size() ? b[i] : 1.0;
      if (hi <= lo) continue;
      probe(i, hi);
      probe(i, std::clamp(u0, lo, hi));
      for (int k = 1; k <= 8; ++k) probe(i, lo + (hi - lo) * k / 9.0);
    }
    return best;
  }
  const double a = q / p;
  const double c = q * alpha;
  LogSumExp acc;
  // head cell: x** = x* there
  acc.add(q * std::log(v[0]) + log_cell_weight(std::log(b[0]), 1.0, true, a, c));
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const double lo = std::log(b[i - 1]);
    const double hi = i < x.size() ? std::log(b[i]) : 0.0;
    if (hi <= lo) continue;
    CompensatedSum s;
    const auto chunks = static_cast<int>(std::ceil(hi - lo));
    const double width = (hi - lo) / chunks;
    for (int ch = 0; ch < chunks; ++ch) {
      const double mid = lo + width * (ch + 0.5);
      for (std::size_t k = 0; k < kNodes; ++k) {
        const double t = mid + 0.5 * width * g.nodes[k];
        const double u = std::exp(t);
        s.add(g.weights[k] * 0.5 * width * std::pow(avg(i, u), q) *
              std::exp(a * t + c * std::log1p(-t)));
      }
    }
    if (s.value() > 0.0) acc.add(std::log(s.value()));
  }
  return std::exp(acc.value() / q);
}

double lambda_norm_value(const RearrangementProfile& x,
                         const std::function<double(double)>& phi) {
  CompensatedSum s;
  const auto& v = x.values();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double next = i + 1 < x.size() ? v[i + 1] : 0.0;
    s.add(phi(x.breakpoints()[i]) * (v[i] - next));
  }
  return s.value();
}

double lambda_norm_value(const RearrangementProfile& x, const Weight& w) {
  validate(w);
  return lambda_norm_value(x, [&](double t) { return std::exp(weight_log(w, std::log(t))); });
}

NormResult lambda_norm(const RearrangementProfile& x, const Weight& w) {
  const double v = lambda_norm_value(x, w);
  return {v, v, v, x.size(), false};
}

NormResult lambda_norm(const StepFunction& x, const Weight& w) {
  return lambda_norm(rearrange(x), w);
}

double norm_value(const RearrangementProfile& x, const SpaceSpec& space) {
  return std::visit(Overloaded{
                        [&](const LambdaSpace& s) { return lambda_norm_value(x, s.weight); },
                        [&](const LorentzZygmund& s) {
                          return lz_norm_value(x, s.p, s.q, s.alpha);
                        },
                    },
                    space);
}

NormResult norm(const RearrangementProfile& x, const SpaceSpec& space) {
  const double v = norm_value(x, space);
  return {v, v, v, x.size(), false};
}

NormResult norm(const StepFunction& x, const SpaceSpec& space) {
  return norm(rearrange(x), space);
}

NormResult analytic_norm(const AnalyticFunction& f, const SpaceSpec& space, std::size_t n,
                         const GrowthRule& rule) {
  validate(space);
  if (n < 2) throw InvalidArgument("grid needs at least 2 cells");
  NormResult out;
  out.grid_n = n;
  out.lower_bracket = norm_value(rearrange(sample_to_grid(f, n, SampleMode::lower)), space);
  out.upper_bracket = norm_value(rearrange(sample_to_grid(f, n, SampleMode::upper)), space);
  out.value = out.lower_bracket;
  if (std::holds_alternative<SingularPowerLog>(f) && n >= 16) {
    std::vector<double> sizes;
    std::vector<double> values;
    for (std::size_t k = n / 8; k < n; k *= 2) {
      sizes.push_back(static_cast<double>(k));
      values.push_back(norm_value(rearrange(sample_to_grid(f, k, SampleMode::lower)), space));
    }
    sizes.push_back(static_cast<double>(n));
    values.push_back(out.lower_bracket);
    if (classify_growth(sizes, values, rule).classification == Classification::divergent) {
      out.divergent = true;
      out.value = kInf;
      out.upper_bracket = kInf;
    }
  }
  return out;
}

double log_fundamental_function(const SpaceSpec& space, double log_t) {
  if (!(log_t <= 0.0)) throw InvalidArgument("fundamental function needs t in (0,1]");
  return std::visit(Overloaded{
                        [&](const LambdaSpace& s) { return weight_log(s.weight, log_t); },
                        [&](const LorentzZygmund& s) {
                          if (std::isinf(s.q)) {
                            const double lu0 = 1.0 - s.p * s.alpha;
                            return log_phi(s.p, s.alpha, std::min(lu0, log_t));
                          }
                          const double a = s.q / s.p;
                          return log_cell_weight(log_t, 1.0, true, a, s.q * s.alpha) / s.q;
                        },
                    },
                    space);
}

double fundamental_function(const SpaceSpec& space, double t) {
  if (!(t > 0.0 && t <= 1.0)) throw InvalidArgument("fundamental function needs t in (0,1]");
  validate(space);
  return std::exp(log_fundamental_function(space, std::log(t)));
}

double weight_dilation_sup(const Weight& w, double v) {
  validate(w);
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("dilation factor must be positive");
  return std::visit(Overloaded{
                        [&](const PowerWeight& g) { return std::pow(v, g.gamma); },
                        [&](const LogDampedWeight& g) {
                          const double base = std::pow(v, g.alpha);
                          if (v <= 1.0) return base;
                          return base * std::log(g.C * v) / std::log(g.C);
                        },
                        [&](const PowerLogWeight& g) {
                          const double base = std::pow(v, 1.0 / g.p);
                          if (v <= 1.0) {
                            return g.alpha > 0.0 ? base * std::pow(1.0 - std::log(v), g.alpha)
                                                 : base;
                          }
                          return g.alpha < 0.0 ? base * std::pow(1.0 + std::log(v), -g.alpha)
                                               : base;
                        },
                    },
                    w);
}

double weight_dilation_sup_numeric(const Weight& w, double v) {
  validate(w);
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("dilation factor must be positive");
  const double lv = std::log(v);
  const double s_min = std::max(0.0, lv);
  auto f = [&](double S) { return weight_log_ratio(w, S, lv); };
  return std::exp(sup_over_offsets(f, s_min, -128, 16 * 300));
}

double dilation_norm(const SpaceSpec& space, double t) {
  validate(space);
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("dilation factor must be positive");
  if (const auto* s = std::get_if<LambdaSpace>(&space)) return weight_dilation_sup(s->weight, t);
  const auto& lz = std::get<LorentzZygmund>(space);
  if (lz.alpha == 0.0) return std::pow(t, 1.0 / lz.p);
  // The functional is a Lambda norm of x^q with weight phi_E^q, so the sup is
  // attained along indicators: sup_s phi_E(ts) / phi_E(s), s <= min(1, 1/t).
  const double lt = std::log(t);
  auto f = [&](double S) {
    return log_fundamental_function(space, lt - S) - log_fundamental_function(space, -S);
  };
  const double limit = lt / lz.p;
  return std::exp(std::max(limit, sup_over_offsets(f, std::max(0.0, lt), -64, 96)));
}

BoydEstimate boyd_indices(const SpaceSpec& space, double residual_threshold) {
  std::vector<double> lt_lo;
  std::vector<double> ln_lo;
  std::vector<double> lt_hi;
  std::vector<double> ln_hi;
  for (int k = 8; k <= 20; ++k) {
    const double t = std::ldexp(1.0, -k);
    lt_lo.push_back(std::log(t));
    ln_lo.push_back(std::log(dilation_norm(space, t)));
    lt_hi.push_back(-std::log(t));
    ln_hi.push_back(std::log(dilation_norm(space, 1.0 / t)));
  }
  const LinearFit lo = least_squares(lt_lo, ln_lo);
  const LinearFit hi = least_squares(lt_hi, ln_hi);
  BoydEstimate out{lo.slope, hi.slope, lo.residual, hi.residual, false};
  out.flagged = lo.residual > residual_threshold || hi.residual > residual_threshold;
  return out;
}

}  // namespace symspace
