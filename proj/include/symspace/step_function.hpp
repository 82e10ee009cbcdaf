#pragma once

#include <cstddef>
#include <vector>

namespace symspace {

struct Cell {
  double measure = 0.0;
  double value = 0.0;
};

// Finitely many values on disjoint subsets of (0,1]. Only the multiset of
// (measure, |value|) pairs is kept; every norm in the library is
// rearrangement invariant. The uncovered part of (0,1] carries value 0.
class StepFunction {
 public:
  StepFunction() = default;
  explicit StepFunction(std::vector<Cell> cells);

  // Value `value` on a set of measure t.
  static StepFunction indicator(double t, double value = 1.0);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  double total_measure() const;
  double integral() const;

 private:
  std::vector<Cell> cells_;
};

// Nonincreasing left-continuous step function on (0,1]: value values()[i] on
// (breakpoints()[i-1], breakpoints()[i]], zero after the last breakpoint.
// Values are strictly decreasing and positive; cell measures are kept next to
// the cumulative breakpoints so tiny cells do not lose precision.
class RearrangementProfile {
 public:
  RearrangementProfile() = default;

  // Sorts, drops zero values and coalesces equal values.
  static RearrangementProfile from_cells(std::vector<Cell> cells);
  // Cells already ordered by strictly decreasing value.
  static RearrangementProfile from_sorted(std::vector<double> values,
                                          std::vector<double> measures);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& measures() const { return measures_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double support() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }
  double sup() const { return values_.empty() ? 0.0 : values_.front(); }

  double operator()(double t) const;
  // Prefix integrals: integral()[i] = int_0^{breakpoints()[i]} x*.
  std::vector<double> prefix_integrals() const;
  double integral() const;
  StepFunction to_step_function() const;

 private:
  std::vector<double> values_;
  std::vector<double> measures_;
  std::vector<double> breakpoints_;
};

double distribution(const StepFunction& x, double tau);
double distribution(const RearrangementProfile& x, double tau);

RearrangementProfile rearrange(const StepFunction& x);

// x**(t) = (1/t) int_0^t x*(s) ds.
double average_rearrangement(const RearrangementProfile& x, double t);
double average_rearrangement(const StepFunction& x, double t);

// sigma_t acting on the rearranged form, truncated at measure 1.
RearrangementProfile dilate(const RearrangementProfile& x, double t);
StepFunction dilate(const StepFunction& x, double t);

// Sup over the merged breakpoints (restricted to t >= t_min) of
// |x*(t) - y*(t)|, relative to the smaller of the two where both exceed
// 1e-6 times the larger sup, absolute otherwise.
double equimeasurability_distance(const RearrangementProfile& x,
                                  const RearrangementProfile& y,
                                  double t_min = 0.0);
double equimeasurability_distance(const StepFunction& x, const StepFunction& y,
                                  double t_min = 0.0);

}  // namespace symspace
