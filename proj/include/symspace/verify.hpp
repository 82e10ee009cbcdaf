#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "symspace/growth.hpp"
#include "symspace/report.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

// Verification drivers behind `symspace verify <id>`. Each throws
// PreconditionViolation when the parameters fall outside the hypotheses of
// the statement being checked.

std::vector<double> dyadic_grid(int k_lo, int k_hi);  // 2^k for k in [k_lo, k_hi]
std::vector<int> level_range(int lo, int hi, int step = 1);

// Fundamental function of the multiplicator space against ||sigma_t||:
// sup over stock y of ||chi_(0,t) (x) y|| / ||y|| within [0.9, 1] of the
// dilation norm.
VerdictReport verify_eq2(const SpaceSpec& space, const std::vector<double>& t_grid,
                         std::size_t grid_n = 1024);

// Dilation norms on the space and on its multiplicator space; for the
// log-damped weight also the exact product and vanishing ratio for t >= 1.
VerdictReport verify_thm12(const SpaceSpec& space, const std::vector<double>& t_grid);

// Multiplicator brackets of the twenty test functions contain the closed-form
// multiplicator norm within [1/2, 2]; closed-form dilation function against
// its numeric sup on 64 points.
VerdictReport verify_ex11(const SpaceSpec& space, std::size_t grid_n = 1024);

VerdictReport verify_lemma22(double p, double a0, double a1, const std::vector<int>& levels);

VerdictReport verify_thm21(double p, double r, double q, const std::vector<int>& levels,
                           const GrowthRule& rule = {}, double delta = 0.01,
                           std::uint64_t seed = 7);

VerdictReport verify_thm25(double p, double r, double q, double beta,
                           const std::vector<int>& levels, double delta = 0.01,
                           const GrowthRule& rule = {});

VerdictReport verify_cor27(double p, double r, double q, const std::vector<int>& levels,
                           double delta = 0.01, const GrowthRule& rule = {});

// E = L_{pq}, p <= q: brackets contain ||x||_p within factor 4 and the
// disjoint-sum constant grows with m when q > p.
VerdictReport verify_cor112(double p, double q, std::size_t grid_n = 1024,
                            std::size_t m_max = 64, std::size_t trials = 100,
                            std::uint64_t seed = 7);

VerdictReport verify_thm114(const SpaceSpec& space, std::size_t m_max = 64,
                            std::size_t trials = 100, std::uint64_t seed = 7,
                            std::size_t grid_n = 64, const GrowthRule& rule = {});

// Stock ratio into L_{ps} from L_{pr} x L_{pq}; requires the conditions to hold.
VerdictReport verify_oneil_regime(double p, double q, double r, double s,
                                  const std::vector<int>& levels, const GrowthRule& rule = {},
                                  std::uint64_t seed = 7);

// psi_{2,0}: bounded in L_{2,inf}, divergent in L_{2,4}(log L)^{-1/4}; the
// squared-fundamental ratio of the two spaces passes every C by t = e^{1-C}.
VerdictReport verify_incomparability(const std::vector<int>& levels,
                                     const GrowthRule& rule = {});

// Dispatch by theorem id: eq2, thm12, ex11, lemma22, thm21, thm25, cor27,
// cor112, thm114.
struct VerifyParams {
  double p = 2.0;
  double q = 4.0;
  double r = 4.0;
  double beta = 0.01;
  double a0 = 0.0;
  double a1 = 0.0;
  double delta = 0.01;
  std::vector<int> levels;  // empty: per-id default
  std::uint64_t seed = 7;
  std::size_t grid_n = 1024;
  std::size_t m_max = 64;
  std::size_t trials = 100;
  bool has_space = false;
  SpaceSpec space = LambdaSpace{LogDampedWeight{0.5, 20.085536923187668}};
  GrowthRule rule;
};

VerdictReport run_verification(const std::string& id, const VerifyParams& params);
bool is_verification_id(const std::string& id);

}  // namespace symspace
