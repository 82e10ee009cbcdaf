#include "symspace/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"

namespace symspace {

namespace {

constexpr double kMeasureSlack = 1e-12;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be finite");
}

}  // namespace

StepFunction::StepFunction(std::vector<Cell> cells) : cells_(std::move(cells)) {
  CompensatedSum total;
  for (Cell& c : cells_) {
    require_finite(c.measure, "cell measure");
    require_finite(c.value, "cell value");
    if (c.measure <= 0.0) throw InvalidArgument("cell measures must be positive");
    c.value = std::fabs(c.value);
    total.add(c.measure);
  }
  if (total.value() > 1.0 + kMeasureSlack) {
    throw InvalidArgument("total cell measure exceeds 1");
  }
}

StepFunction StepFunction::indicator(double t, double value) {
  if (!(t > 0.0 && t <= 1.0)) throw InvalidArgument("indicator measure must lie in (0,1]");
  return StepFunction({{t, value}});
}

double StepFunction::total_measure() const {
  CompensatedSum s;
  for (const Cell& c : cells_) s.add(c.measure);
  return s.value();
}

double StepFunction::integral() const {
  CompensatedSum s;
  for (const Cell& c : cells_) s.add(c.measure * c.value);
  return s.value();
}

RearrangementProfile RearrangementProfile::from_cells(std::vector<Cell> cells) {
  std::erase_if(cells, [](const Cell& c) { return !(c.value > 0.0) || !(c.measure > 0.0); });
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.measure < b.measure;
  });
  std::vector<double> values;
  std::vector<double> measures;
  std::size_t i = 0;
  while (i < cells.size()) {
    CompensatedSum m;
    const double v = cells[i].value;
    for (; i < cells.size() && cells[i].value == v; ++i) m.add(cells[i].measure);
    values.push_back(v);
    measures.push_back(m.value());
  }
  return from_sorted(std::move(values), std::move(measures));
}

RearrangementProfile RearrangementProfile::from_sorted(std::vector<double> values,
                                                       std::vector<double> measures) {
  if (values.size() != measures.size()) {
    throw InvalidArgument("profile values and measures differ in length");
  }
  RearrangementProfile p;
  p.values_.reserve(values.size());
  p.measures_.reserve(values.size());
  p.breakpoints_.reserve(values.size());
  CompensatedSum cum;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !(measures[i] > 0.0)) continue;
    if (!p.values_.empty() && !(values[i] < p.values_.back())) {
      throw InvalidArgument("profile values must be strictly decreasing");
    }
    cum.add(measures[i]);
    p.values_.push_back(values[i]);
    p.measures_.push_back(measures[i]);
    p.breakpoints_.push_back(std::min(cum.value(), 1.0));
  }
  if (cum.value() > 1.0 + kMeasureSlack) throw InvalidArgument("profile measure exceeds 1");
  return p;
}

double RearrangementProfile::operator()(double t) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) return 0.0;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

std::vector<double> RearrangementProfile::prefix_integrals() const {
  std::vector<double> out(values_.size());
  CompensatedSum s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    s.add(values_[i] * measures_[i]);
    out[i] = s.value();
  }
  return out;
}

double RearrangementProfile::integral() const {
  CompensatedSum s;
  for (std::size_t i = 0; i < values_.size(); ++i) s.add(values_[i] * measures_[i]);
  return s.value();
}

StepFunction RearrangementProfile::to_step_function() const {
  std::vector<Cell> cells(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) cells[i] = {measures_[i], values_[i]};
  return StepFunction(std::move(cells));
}

double distribution(const StepFunction& x, double tau) {
  require_finite(tau, "tau");
  CompensatedSum s;
  for (const Cell& c : x.cells()) {
    if (c.value > tau) s.add(c.measure);
  }
  return s.value();
}

double distribution(const RearrangementProfile& x, double tau) {
  require_finite(tau, "tau");
  const auto& v = x.values();
  // values strictly decreasing: count those > tau
  auto it = std::partition_point(v.begin(), v.end(), [tau](double a) { return a > tau; });
  if (it == v.begin()) return 0.0;
  return x.breakpoints()[static_cast<std::size_t>(it - v.begin()) - 1];
}

RearrangementProfile rearrange(const StepFunction& x) {
  return RearrangementProfile::from_cells(x.cells());
}

double average_rearrangement(const RearrangementProfile& x, double t) {
  require_finite(t, "t");
  if (t <= 0.0) throw InvalidArgument("average rearrangement needs t > 0");
  const auto& b = x.breakpoints();
  CompensatedSum s;
  double left = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= t) {
      s.add(x.values()[i] * (t - left));
      return s.value() / t;
    }
    s.add(x.values()[i] * x.measures()[i]);
    left = b[i];
  }
  return s.value() / t;
}

double average_rearrangement(const StepFunction& x, double t) {
  return average_rearrangement(rearrange(x), t);
}

RearrangementProfile dilate(const RearrangementProfile& x, double t) {
  require_finite(t, "t");
  if (t <= 0.0) throw InvalidArgument("dilation needs t > 0");
  std::vector<double> values;
  std::vector<double> measures;
  CompensatedSum used;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double m = x.measures()[i] * t;
    const double room = 1.0 - used.value();
    if (room <= 0.0) break;
    if (m > room) m = room;
    values.push_back(x.values()[i]);
    measures.push_back(m);
    used.add(m);
  }
  return RearrangementProfile::from_sorted(std::move(values), std::move(measures));
}

StepFunction dilate(const StepFunction& x, double t) {
  return dilate(rearrange(x), t).to_step_function();
}

double equimeasurability_distance(const RearrangementProfile& x,
                                  const RearrangementProfile& y, double t_min) {
  const double floor = 1e-6 * std::max(x.sup(), y.sup());
  const auto& bx = x.breakpoints();
  const auto& by = y.breakpoints();
  double worst = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  // Walk the merged breakpoints; on (prev, t] both profiles are constant.
  while (i < bx.size() || j < by.size()) {
    double t;
    if (j >= by.size() || (i < bx.size() && bx[i] <= by[j])) {
      t = bx[i];
    } else {
      t = by[j];
    }
    const double a = i < bx.size() ? x.values()[i] : 0.0;
    const double b = j < by.size() ? y.values()[j] : 0.0;
    if (t >= t_min) {
      const double diff = std::fabs(a - b);
      const double lo = std::min(a, b);
      const double d = lo > floor ? diff / lo : diff;
      worst = std::max(worst, d);
    }
    if (i < bx.size() && bx[i] == t) ++i;
    if (j < by.size() && by[j] == t) ++j;
  }
  return worst;
}

double equimeasurability_distance(const StepFunction& x, const StepFunction& y,
                                  double t_min) {
  return equimeasurability_distance(rearrange(x), rearrange(y), t_min);
}

}  // namespace symspace
