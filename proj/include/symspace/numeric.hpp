#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace symspace {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kE = 2.718281828459045235360287;

// Reciprocal with 1/inf = 0.
inline double reciprocal(double v) { return v == kInf ? 0.0 : 1.0 / v; }

// Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(std::size_t n);

// Neumaier-compensated running sum. Order dependent but deterministic.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(std::span<const double> v);

// Accumulates exp(x_i) without overflow; value() returns ln(sum exp(x_i)).
class LogSumExp {
 public:
  void add(double log_term);
  double value() const;

 private:
  std::vector<double> terms_;
};

// Uniform doubles in (0, 1] from the top 53 bits of mt19937_64. The engine
// output is fixed by the standard, so streams are reproducible across
// toolchains (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// 17 significant digits; "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double v);
// Six significant digits, for labels.
std::string format_short(double v);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square residual
};

LinearFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace symspace
