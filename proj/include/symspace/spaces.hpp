#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>

#include "symspace/analytic.hpp"
#include "symspace/growth.hpp"
#include "symspace/step_function.hpp"

namespace symspace {

// Lambda(phi): norm int x* d phi.
struct LambdaSpace {
  Weight weight;
};

// L_{pq}(log L)^alpha: (int (x*(u) u^{1/p} ln^alpha(e/u))^q du/u)^{1/q}, sup
// form for q = inf. `closure` marks the closure of L_inf; it only matters for
// membership verdicts.
struct LorentzZygmund {
  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;
  bool closure = false;
};

using SpaceSpec = std::variant<LambdaSpace, LorentzZygmund>;

SpaceSpec lambda_space(const Weight& w);
SpaceSpec lz_space(double p, double q, double alpha);
SpaceSpec lz0_space(double p, double q, double alpha);
SpaceSpec lpq_space(double p, double q);
SpaceSpec lp_space(double p);

void validate(const SpaceSpec& space);
std::string describe(const SpaceSpec& space);

struct NormResult {
  double value = 0.0;
  double lower_bracket = 0.0;
  double upper_bracket = 0.0;
  std::size_t grid_n = 0;
  bool divergent = false;
};

double lz_norm_value(const RearrangementProfile& x, double p, double q, double alpha);
NormResult lz_norm(const RearrangementProfile& x, double p, double q, double alpha);
NormResult lz_norm(const StepFunction& x, double p, double q, double alpha);

// Same functional evaluated on x** instead of x*.
double lz_norm_average(const RearrangementProfile& x, double p, double q, double alpha);

// Abel sum  sum_i phi(b_i) (v_i - v_{i+1}).
double lambda_norm_value(const RearrangementProfile& x, const Weight& w);
double lambda_norm_value(const RearrangementProfile& x,
                         const std::function<double(double)>& phi);
NormResult lambda_norm(const RearrangementProfile& x, const Weight& w);
NormResult lambda_norm(const StepFunction& x, const Weight& w);

double norm_value(const RearrangementProfile& x, const SpaceSpec& space);
NormResult norm(const RearrangementProfile& x, const SpaceSpec& space);
NormResult norm(const StepFunction& x, const SpaceSpec& space);

// Lower/upper grid samples at n; divergence checked on n/8, n/4, n/2, n.
NormResult analytic_norm(const AnalyticFunction& f, const SpaceSpec& space, std::size_t n,
                         const GrowthRule& rule = {});

double fundamental_function(const SpaceSpec& space, double t);
// ln of the fundamental function at t = e^{log_t}.
double log_fundamental_function(const SpaceSpec& space, double log_t);

// sup{ phi(s v) / phi(s) : 0 < s <= min(1, 1/v) }
double weight_dilation_sup(const Weight& w, double v);          // closed form
double weight_dilation_sup_numeric(const Weight& w, double v);  // grid + golden section

// Norm of sigma_t on the space.
double dilation_norm(const SpaceSpec& space, double t);

struct BoydEstimate {
  double lower = 0.0;  // t -> 0
  double upper = 0.0;  // t -> inf
  double lower_residual = 0.0;
  double upper_residual = 0.0;
  bool flagged = false;
};

BoydEstimate boyd_indices(const SpaceSpec& space, double residual_threshold = 0.05);

}  // namespace symspace
