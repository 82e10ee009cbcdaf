#include "symspace/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>

namespace symspace {

namespace {

GaussRule build_gauss_legendre(std::size_t n) {
  GaussRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * static_cast<double>(j) + 1.0) * z * p2 -
              static_cast<double>(j) * p3) /
             (static_cast<double>(j) + 1.0);
      }
      pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre(n)).first;
  return it->second;
}

void CompensatedSum::add(double v) {
  const double t = sum_ + v;
  if (std::fabs(sum_) >= std::fabs(v)) {
    comp_ += (sum_ - t) + v;
  } else {
    comp_ += (v - t) + sum_;
  }
  sum_ = t;
}

double compensated_sum(std::span<const double> v) {
  CompensatedSum s;
  for (double x : v) s.add(x);
  return s.value();
}

void LogSumExp::add(double log_term) {
  if (log_term == -kInf) return;
  terms_.push_back(log_term);
}

double LogSumExp::value() const {
  if (terms_.empty()) return -kInf;
  const double top = *std::max_element(terms_.begin(), terms_.end());
  if (!std::isfinite(top)) return top;
  CompensatedSum s;
  for (double t : terms_) s.add(std::exp(t - top));
  return top + std::log(s.value());
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  LinearFit fit;
  const std::size_t n = std::min(x.size(), y.size());
  if (n == 0) return fit;
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(n));
  return fit;
}

}  // namespace symspace
