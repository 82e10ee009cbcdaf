#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symspace/growth.hpp"
#include "symspace/lattice.hpp"
#include "symspace/spaces.hpp"
#include "symspace/step_function.hpp"

namespace symspace {

inline constexpr std::size_t kDefaultPairCap = std::size_t{1} << 26;
inline constexpr std::size_t kDefaultExactPairs = std::size_t{1} << 16;

// Exact rearrangement of x(s) y(t) on the unit square.
RearrangementProfile tensor_rearrange(const StepFunction& x, const StepFunction& y,
                                      std::size_t pair_cap = kDefaultPairCap);
RearrangementProfile tensor_rearrange(const RearrangementProfile& x,
                                      const RearrangementProfile& y,
                                      std::size_t pair_cap = kDefaultPairCap);

// A factor prepared for repeated products: its profile and lattice form.
struct TensorFactor {
  RearrangementProfile profile;
  LatticeFunction lattice;

  explicit TensorFactor(const RearrangementProfile& p);
  explicit TensorFactor(const StepFunction& f) : TensorFactor(rearrange(f)) {}
};

// Exact when the pair count is at most exact_pairs; otherwise the product
// goes through the value lattice and value/lower/upper come from the
// mid/lower/upper lattice profiles.
// Without brackets only the value is computed (brackets copy it).
NormResult tensor_norm(const TensorFactor& x, const TensorFactor& y, const SpaceSpec& z,
                       std::size_t exact_pairs = kDefaultExactPairs, bool brackets = true);
NormResult tensor_norm(const StepFunction& x, const StepFunction& y, const SpaceSpec& z,
                       std::size_t exact_pairs = kDefaultExactPairs);

// Rearranged product at the same resolution rule as tensor_norm (mid values).
RearrangementProfile tensor_profile(const TensorFactor& x, const TensorFactor& y,
                                    std::size_t exact_pairs = kDefaultExactPairs);

enum class Bounded { yes, no, out_of_range };
std::string to_string(Bounded b);

struct BoundednessVerdict {
  Bounded bounded = Bounded::out_of_range;
  std::string failing_condition;  // "", "cond1" or "cond2"
};

// B : L_{pr} x L_{pq} -> L_{ps} iff max(q,r) <= s and 1/p + 1/s <= 1/q + 1/r.
BoundednessVerdict oneil_conditions(double p, double q, double r, double s);

// Target of the product for 1 < p <= r <= q <= inf: LZ(p, q, 1/r - 1/p),
// closure flag exactly when p < r < q = inf.
LorentzZygmund product_target(double p, double r, double q);

struct InterpolationExponents {
  double s = 0.0;
  double theta = 0.0;
};
// s = pq/r, theta = 1 - p/r.
InterpolationExponents interpolation_exponents(double p, double r, double q);

struct ProductLawLevel {
  std::size_t n = 0;
  double distance = 0.0;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
};

struct ProductLawReport {
  double target_alpha = 0.0;
  std::vector<ProductLawLevel> levels;
  bool decreasing = false;
};

// Samples psi_{p,a0}, psi_{p,a1} on n cells, rearranges their product and
// compares with psi_{p, a0 + a1 - 1/p} at the product breakpoints t >= 1/n.
ProductLawReport check_product_law(double p, double a0, double a1,
                                   const std::vector<std::size_t>& grid_sizes,
                                   std::size_t exact_pairs = kDefaultExactPairs);

struct MembershipReport {
  bool in_scope = false;
  std::string reason;
  double s = 0.0;
  double alpha = 0.0;
  double norm_lps = 0.0;      // product in L_{ps}
  double norm_target = 0.0;   // product in LZ(p, q, alpha)
  double ratio_lps = 0.0;     // divided by ||x||_{pr} ||y||_{pq}
  double ratio_target = 0.0;
};

// Requires 1 < p <= r <= q < inf and 1/r + 1/q - 1/p >= 0; otherwise
// in_scope is false and only the reason is set.
MembershipReport intersection_membership(const StepFunction& x, const StepFunction& y,
                                         double p, double r, double q,
                                         std::size_t exact_pairs = kDefaultExactPairs);

struct RatioLevel {
  int level = 0;
  std::size_t n = 0;
  double ratio = 0.0;
  std::string x_name;
  std::string y_name;
};

struct RatioSweep {
  std::vector<RatioLevel> levels;
  GrowthSummary growth;
  LinearFit fit;  // ln ratio against ln ln n
};

// sup over stock pairs of ||x (x) y||_Z / (||x||_{pr} ||y||_{pq}) per level.
RatioSweep stock_ratio_sweep(double p, double r, double q, const SpaceSpec& z,
                             const std::vector<int>& levels, const GrowthRule& rule = {},
                             double delta = 0.01, std::uint64_t seed = 7);

// Witness pair x = psi_{p, 1/r + delta}, y = psi_{p, 1/q + delta} against
// LZ(p, q, beta); requires 1 < p < r <= q <= inf and beta > 1/r - 1/p.
// Same pair and ratio without the regime check (any beta); used to scan beta
// across the critical value.
RatioSweep psi_pair_sweep(double p, double r, double q, double beta,
                          const std::vector<int>& levels, double delta = 0.01,
                          const GrowthRule& rule = {});

RatioSweep log_growth_witness(double p, double r, double q, double beta,
                              const std::vector<int>& levels, double delta = 0.01,
                              const GrowthRule& rule = {});

}  // namespace symspace
