#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "symspace/step_function.hpp"

namespace symspace {

// u^{-1/p} ln^{-alpha}(e/u) on (0,1].
struct SingularPowerLog {
  double p = 2.0;
  double alpha = 0.0;
};

double psi_eval(const SingularPowerLog& f, double u);
// ln psi(e^{-s}) for s = -ln u >= 0; finite for any s.
double psi_log_at(const SingularPowerLog& f, double s);
// psi is nonincreasing on (0, monotone_to]; 1 when alpha <= 1/p.
double psi_monotone_to(const SingularPowerLog& f);
// mu{u : psi(u) > v}, by bisection in -ln u.
double psi_distribution(const SingularPowerLog& f, double v);
// v^{-p} ln^{-p alpha} v, the model tail of the distribution function.
double psi_tail_model(double p, double alpha, double v);
// Smallest level from which the tail model is compared: max(e^2, psi(u0)).
double psi_tail_threshold(const SingularPowerLog& f);

struct PowerWeight {
  double gamma = 0.5;
};
// u^{1/p} ln^alpha(e/u)
struct PowerLogWeight {
  double p = 2.0;
  double alpha = 0.0;
};
// s^alpha / ln(C/s); concave on (0,1] once C > exp(1/(1-alpha)).
struct LogDampedWeight {
  double alpha = 0.5;
  double C = 20.085536923187668;
};

using Weight = std::variant<PowerWeight, PowerLogWeight, LogDampedWeight>;

// Throws ConstraintViolation / InvalidArgument on bad parameters.
void validate(const Weight& w);
double weight_eval(const Weight& w, double t);
// ln w(e^{log_t}); log_t may be far below the double range of t.
double weight_log(const Weight& w, double log_t);
// ln(w(v s) / w(s)) at s = e^{-S}, written so that huge S keeps ln v.
double weight_log_ratio(const Weight& w, double S, double log_v);
// Slopes over a log-spaced grid are nonincreasing up to tol (relative).
bool is_concave(const Weight& w, std::size_t grid_size = 512, double tol = 1e-9);

struct ConstantFunction {
  double value = 1.0;
};
struct IndicatorFunction {
  double t = 1.0;
  double value = 1.0;
};

using AnalyticFunction = std::variant<SingularPowerLog, ConstantFunction, IndicatorFunction>;

double analytic_eval(const AnalyticFunction& f, double u);

enum class SampleMode { lower, upper };

// Cell i = ((i-1)/n, i/n]. lower: value at the right endpoint; upper: value
// at the left endpoint, with cell 1 taking f(1/n).
StepFunction sample_to_grid(const AnalyticFunction& f, std::size_t n,
                            SampleMode mode = SampleMode::lower);

}  // namespace symspace
