#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symspace/spaces.hpp"
#include "symspace/step_function.hpp"
#include "symspace/stock.hpp"

namespace symspace {

// m disjoint copies of y, each carrying 1/m of its distribution.
std::vector<StepFunction> disjoint_copies(const StepFunction& y, std::size_t m);

// sum_k coeffs[k] y_k over the disjoint copies of y (m = coeffs.size()).
StepFunction disjoint_sum(const std::vector<double>& coeffs, const StepFunction& y);

// ||sum_k coeffs[k] y_k||_E with y scaled to unit norm first.
double disjoint_sum_norm(const std::vector<double>& coeffs, const SpaceSpec& space,
                         const StepFunction& y);
double disjoint_sum_norm_sup(const std::vector<double>& coeffs, const SpaceSpec& space,
                             const std::vector<NamedFunction>& candidates);

// ||sum_i coeffs[i] chi_((i-1)/m, i/m]||_E
double block_norm(const std::vector<double>& coeffs, const SpaceSpec& space);

struct DisjointSumLevel {
  std::size_t m = 0;
  double constant = 0.0;  // sup of the disjoint-sum norm over block_norm
  std::string argmax;
};

struct DisjointSumReport {
  std::vector<DisjointSumLevel> levels;  // m = 2, 4, ..., m_max
  double constant = 0.0;
};

// Coefficients: `trials` seeded draws (uniform on (0,1], normalized to sum 1)
// plus the all-ones vector and psi-shaped vectors; candidates y from the stock
// family of the space sampled on `grid_n` cells.
DisjointSumReport disjoint_sum_constant(const SpaceSpec& space, std::size_t m_max,
                                        std::size_t trials, std::uint64_t seed,
                                        std::size_t grid_n = 64);

struct MultiplicatorBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> p_bound;  // absent when the lower Boyd index is unusable
  std::string lower_argmax;
  double boyd_lower = 0.0;
};

// lower: sup over stock y of ||x (x) y||_E / ||y||_E (lower lattice bracket);
// upper: 2 ||x||_{Lambda(psi)} with psi(t) = ||sigma_t||_E tabulated on 64
// log-spaced points; p_bound: ||x||_{1/alpha_E} / 2.
MultiplicatorBracket multiplicator_bracket(const StepFunction& x, const SpaceSpec& space,
                                           std::size_t grid_n = 1024, std::uint64_t seed = 7);

// Closed form of the multiplicator space where known: Lambda(phi) ->
// Lambda(M_phi) and L_{pq} -> L_p for p <= q.
SpaceSpec multiplicator_space(const SpaceSpec& space);

struct FundamentalRow {
  double t = 0.0;
  double stock_sup = 0.0;   // sup_y ||chi_(0,t) (x) y|| / ||y||
  double dilation = 0.0;    // ||sigma_t||
  double ratio = 0.0;
  std::string argmax;
};

std::vector<FundamentalRow> check_fundamental_identity(const SpaceSpec& space,
                                                       const std::vector<double>& t_grid,
                                                       std::size_t grid_n = 1024);

struct TransferRow {
  double t = 0.0;
  double on_space = 0.0;        // ||sigma_t||_E
  double on_multiplicator = 0.0;  // ||sigma_t||_{M(E)}
  double inverse_bound = 0.0;   // 1 / ||sigma_{1/t}||_E
  bool holds = false;           // equality (t <= 1) or two-sided bound (t > 1)
  double product = 0.0;         // ||sigma_t||_{M(E)} ||sigma_{1/t}||_E
  double ratio = 0.0;           // ||sigma_t||_{M(E)} / ||sigma_t||_E
};

std::vector<TransferRow> check_dilation_transfer(const SpaceSpec& space,
                                                 const std::vector<double>& t_grid,
                                                 double tol = 1e-9);

}  // namespace symspace
