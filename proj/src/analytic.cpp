#include "symspace/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"

namespace symspace {

namespace {

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw InvalidArgument("p must lie in (1, inf)");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

double psi_eval(const SingularPowerLog& f, double u) {
  check_p(f.p);
  if (!(u > 0.0) || !std::isfinite(u)) throw InvalidArgument("psi needs u > 0");
  if (u > 1.0) throw InvalidArgument("psi is defined on (0,1]");
  return std::exp(psi_log_at(f, -std::log(u)));
}

double psi_log_at(const SingularPowerLog& f, double s) {
  return s / f.p - f.alpha * std::log1p(s);
}

double psi_monotone_to(const SingularPowerLog& f) {
  check_p(f.p);
  if (f.p * f.alpha <= 1.0) return 1.0;
  return std::exp(1.0 - f.p * f.alpha);
}

double psi_distribution(const SingularPowerLog& f, double v) {
  check_p(f.p);
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidArgument("level must be positive and finite");
  const double target = std::log(v);
  // In s = -ln u the log-value decreases on [0, s0] and increases after.
  const double s0 = std::max(0.0, f.p * f.alpha - 1.0);
  if (psi_log_at(f, s0) > target) return 1.0;
  double lo = s0;
  double hi = std::max(1.0, 2.0 * s0);
  while (psi_log_at(f, hi) <= target) hi *= 2.0;
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (psi_log_at(f, mid) > target ? hi : lo) = mid;
  }
  double total = std::exp(-hi);
  if (s0 > 0.0 && target < 0.0) {
    double a = 0.0;
    double b = s0;
    for (int it = 0; it < 400 && b - a > 1e-15 * b; ++it) {
      const double mid = 0.5 * (a + b);
      (psi_log_at(f, mid) > target ? a : b) = mid;
    }
    total += -std::expm1(-a);
  }
  return std::min(total, 1.0);
}

double psi_tail_model(double p, double alpha, double v) {
  check_p(p);
  if (!(v > 1.0) || !std::isfinite(v)) throw InvalidArgument("tail model needs v > 1");
  return std::exp(-p * std::log(v) - p * alpha * std::log(std::log(v)));
}

double psi_tail_threshold(const SingularPowerLog& f) {
  const double u0 = psi_monotone_to(f);
  return std::max(kE * kE, psi_eval(f, u0));
}

void validate(const Weight& w) {
  std::visit(Overloaded{
                 [](const PowerWeight& g) {
                   if (!(g.gamma > 0.0 && g.gamma <= 1.0)) {
                     throw InvalidArgument("power weight exponent must lie in (0,1]");
                   }
                 },
                 [](const PowerLogWeight& g) { check_p(g.p); },
                 [](const LogDampedWeight& g) {
                   if (!(g.alpha > 0.0 && g.alpha < 1.0)) {
                     throw InvalidArgument("log-damped weight exponent must lie in (0,1)");
                   }
                   if (!(g.C > std::exp(1.0 / (1.0 - g.alpha)))) {
                     throw ConstraintViolation("log-damped weight needs C > exp(1/(1-alpha))");
                   }
                 },
             },
             w);
}

double weight_log(const Weight& w, double log_t) {
  return std::visit(Overloaded{
                        [&](const PowerWeight& g) { return g.gamma * log_t; },
                        [&](const PowerLogWeight& g) {
                          return log_t / g.p + g.alpha * std::log1p(-log_t);
                        },
                        [&](const LogDampedWeight& g) {
                          return g.alpha * log_t - std::log(std::log(g.C) - log_t);
                        },
                    },
                    w);
}

double weight_eval(const Weight& w, double t) {
  validate(w);
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("weight needs t > 0");
  return std::exp(weight_log(w, std::log(t)));
}

double weight_log_ratio(const Weight& w, double S, double log_v) {
  return std::visit(Overloaded{
                        [&](const PowerWeight& g) { return g.gamma * log_v; },
                        [&](const PowerLogWeight& g) {
                          return log_v / g.p + g.alpha * std::log1p(-log_v / (1.0 + S));
                        },
                        [&](const LogDampedWeight& g) {
                          const double lc = std::log(g.C);
                          return g.alpha * log_v - std::log1p(-log_v / (lc + S));
                        },
                    },
                    w);
}

bool is_concave(const Weight& w, std::size_t grid_size, double tol) {
  validate(w);
  if (grid_size < 3) throw InvalidArgument("concavity grid needs at least 3 points");
  // log-spaced points from 1e-12 to 1
  std::vector<double> t(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(grid_size - 1);
    t[i] = std::exp(std::log(1e-12) * (1.0 - frac));
  }
  double prev_slope = kInf;
  for (std::size_t i = 0; i + 1 < grid_size; ++i) {
    const double slope = (weight_eval(w, t[i + 1]) - weight_eval(w, t[i])) / (t[i + 1] - t[i]);
    if (slope < 0.0) return false;
    if (slope > prev_slope * (1.0 + tol)) return false;
    prev_slope = slope;
  }
  return true;
}

double analytic_eval(const AnalyticFunction& f, double u) {
  if (!(u > 0.0) || u > 1.0) throw InvalidArgument("analytic functions live on (0,1]");
  return std::visit(Overloaded{
                        [&](const SingularPowerLog& g) { return psi_eval(g, u); },
                        [&](const ConstantFunction& g) { return std::fabs(g.value); },
                        [&](const IndicatorFunction& g) {
                          return u < g.t ? std::fabs(g.value) : 0.0;
                        },
                    },
                    f);
}

StepFunction sample_to_grid(const AnalyticFunction& f, std::size_t n, SampleMode mode) {
  if (n < 2) throw InvalidArgument("grid needs at least 2 cells");
  const double dn = static_cast<double>(n);
  std::vector<Cell> cells;
  cells.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t k = mode == SampleMode::lower ? i : std::max<std::size_t>(i - 1, 1);
    const double v = analytic_eval(f, static_cast<double>(k) / dn);
    if (v > 0.0) cells.push_back({1.0 / dn, v});
  }
  return StepFunction(std::move(cells));
}

}  // namespace symspace
