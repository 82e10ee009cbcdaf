#include "symspace/lattice.hpp"

#include <cmath>

#include "symspace/errors.hpp"

namespace symspace {

namespace {
constexpr std::int64_t kMaxBins = std::int64_t{1} << 22;
}

double lattice_value(std::int64_t k) {
  return std::exp2(static_cast<double>(k) / kLatticeSteps);
}

std::int64_t lattice_index(double v) {
  auto k = static_cast<std::int64_t>(std::floor(std::log2(v) * kLatticeSteps));
  while (lattice_value(k) > v) --k;
  while (lattice_value(k + 1) <= v) ++k;
  return k;
}

LatticeFunction to_lattice(const RearrangementProfile& x) {
  LatticeFunction out;
  if (x.empty()) return out;
  // values are decreasing: the last one has the smallest index
  const std::int64_t lo = lattice_index(x.values().back());
  const std::int64_t hi = lattice_index(x.values().front());
  if (hi - lo + 1 > kMaxBins) throw ResourceLimit("value range too wide for the lattice");
  out.k0 = lo;
  out.mass.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.mass[static_cast<std::size_t>(lattice_index(x.values()[i]) - lo)] += x.measures()[i];
  }
  return out;
}

LatticeFunction lattice_tensor(const LatticeFunction& a, const LatticeFunction& b) {
  LatticeFunction out;
  if (a.mass.empty() || b.mass.empty()) return out;
  const auto len = static_cast<std::int64_t>(a.mass.size() + b.mass.size() - 1);
  if (len > kMaxBins) throw ResourceLimit("value range too wide for the lattice");
  out.k0 = a.k0 + b.k0;
  out.span = a.span + b.span;
  out.mass.assign(static_cast<std::size_t>(len), 0.0);
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b.mass.size(); ++j) {
    if (b.mass[j] > 0.0) nz.push_back(j);
  }
  for (std::size_t i = 0; i < a.mass.size(); ++i) {
    const double ma = a.mass[i];
    if (ma == 0.0) continue;
    double* row = out.mass.data() + i;
    for (std::size_t j : nz) row[j] += ma * b.mass[j];
  }
  return out;
}

RearrangementProfile to_profile(const LatticeFunction& f, LatticeMode mode) {
  std::vector<double> values;
  std::vector<double> measures;
  const double shift = mode == LatticeMode::lower ? 0.0
                       : mode == LatticeMode::mid ? 0.5 * f.span
                                                  : static_cast<double>(f.span);
  for (std::size_t j = f.mass.size(); j-- > 0;) {
    if (!(f.mass[j] > 0.0)) continue;
    const double k = static_cast<double>(f.k0 + static_cast<std::int64_t>(j)) + shift;
    values.push_back(std::exp2(k / kLatticeSteps));
    measures.push_back(f.mass[j]);
  }
  return RearrangementProfile::from_sorted(std::move(values), std::move(measures));
}

}  // namespace symspace
