#include "symspace/verify.hpp"

#include <algorithm>
#include <cmath>

#include "symspace/analytic.hpp"
#include "symspace/errors.hpp"
#include "symspace/multiplicator.hpp"
#include "symspace/numeric.hpp"
#include "symspace/stock.hpp"
#include "symspace/tensor.hpp"

namespace symspace {

namespace {

using Params = std::vector<std::pair<std::string, Field>>;

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

VerdictReport start(const std::string& command, Params params) {
  VerdictReport r;
  r.command = command;
  r.parameters = std::move(params);
  return r;
}

Field levels_field(const std::vector<int>& levels) {
  std::string s;
  for (std::size_t i = 0; i < levels.size(); ++i) s += (i ? " " : "") + std::to_string(levels[i]);
  return s;
}

void add_growth_metrics(VerdictReport& r, const RatioSweep& sweep) {
  r.metrics.push_back({"fitted_exponent", sweep.fit.slope});
  r.metrics.push_back({"fit_residual", sweep.fit.residual});
  r.metrics.push_back({"longest_growth_run", as_int(sweep.growth.longest_run)});
}

ReportTable sweep_table(const RatioSweep& sweep) {
  ReportTable t{"levels", {"level", "n", "ratio", "growth_per_doubling", "fitted_exponent", "x", "y"}, {}};
  for (std::size_t i = 0; i < sweep.levels.size(); ++i) {
    const auto& lv = sweep.levels[i];
    t.rows.push_back({std::int64_t{lv.level}, as_int(lv.n), lv.ratio,
                      sweep.growth.growth_per_doubling[i], sweep.fit.slope, lv.x_name, lv.y_name});
  }
  return t;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

bool is_log_damped(const SpaceSpec& space) {
  const auto* lam = std::get_if<LambdaSpace>(&space);
  return lam != nullptr && std::holds_alternative<LogDampedWeight>(lam->weight);
}

std::vector<int> or_default(const std::vector<int>& levels, int lo, int hi) {
  return levels.empty() ? level_range(lo, hi) : levels;
}

}  // namespace

std::vector<double> dyadic_grid(int k_lo, int k_hi) {
  std::vector<double> out;
  for (int k = k_lo; k <= k_hi; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

std::vector<int> level_range(int lo, int hi, int step) {
  if (step <= 0 || hi < lo) throw InvalidArgument("levels must be a nonempty increasing range");
  std::vector<int> out;
  for (int k = lo; k <= hi; k += step) out.push_back(k);
  return out;
}

VerdictReport verify_eq2(const SpaceSpec& space, const std::vector<double>& t_grid,
                         std::size_t grid_n) {
  VerdictReport r = start("verify eq2", {{"space", describe(space)}, {"grid_n", as_int(grid_n)}});
  const auto rows = check_fundamental_identity(space, t_grid, grid_n);
  ReportTable t{"fundamental", {"t", "stock_sup", "dilation_norm", "ratio", "argmax"}, {}};
  double lo = kInf;
  double hi = 0.0;
  for (const auto& row : rows) {
    t.rows.push_back({row.t, row.stock_sup, row.dilation, row.ratio, row.argmax});
    lo = std::min(lo, row.ratio);
    hi = std::max(hi, row.ratio);
  }
  r.tables.push_back(std::move(t));
  r.metrics = {{"min_ratio", lo}, {"max_ratio", hi}};
  r.passed = lo >= 0.9 && hi <= 1.0 + 1e-9;
  r.classification = pass_fail(r.passed);
  r.verdict = "stock sup / dilation norm in [" + format_short(lo) + ", " + format_short(hi) +
              "]; expected within [0.9, 1]";
  return r;
}

VerdictReport verify_thm12(const SpaceSpec& space, const std::vector<double>& t_grid) {
  VerdictReport r = start("verify thm12", {{"space", describe(space)}});
  const auto rows = check_dilation_transfer(space, t_grid);
  ReportTable t{"dilation",
                {"t", "norm_on_space", "norm_on_multiplicator", "inverse_bound", "holds", "product",
                 "ratio"},
                {}};
  bool all_hold = true;
  double worst_product = 0.0;
  bool ratio_decreasing = true;
  double prev_ratio = kInf;
  for (const auto& row : rows) {
    t.rows.push_back({row.t, row.on_space, row.on_multiplicator, row.inverse_bound, row.holds,
                      row.product, row.ratio});
    all_hold = all_hold && row.holds;
    if (row.t > 1.0) {
      worst_product = std::max(worst_product, std::fabs(row.product - 1.0));
      if (!(row.ratio < prev_ratio)) ratio_decreasing = false;
      prev_ratio = row.ratio;
    }
  }
  r.tables.push_back(std::move(t));
  r.metrics.push_back({"all_hold", all_hold});
  r.passed = all_hold;
  if (is_log_damped(space)) {
    r.metrics.push_back({"max_product_deviation", worst_product});
    r.metrics.push_back({"ratio_decreasing", ratio_decreasing});
    r.passed = r.passed && worst_product <= 1e-9 && ratio_decreasing;
  }
  r.classification = pass_fail(r.passed);
  r.verdict = r.passed ? "dilation norms transfer to the multiplicator space"
                       : "dilation transfer check failed";
  return r;
}

VerdictReport verify_ex11(const SpaceSpec& space, std::size_t grid_n) {
  const auto* lam = std::get_if<LambdaSpace>(&space);
  if (lam == nullptr) throw PreconditionViolation("ex11 needs a Lambda(phi) space");
  VerdictReport r = start("verify ex11", {{"space", describe(space)}, {"grid_n", as_int(grid_n)}});
  const SpaceSpec mult = multiplicator_space(space);
  const auto fns = test_functions();
  ReportTable brackets{"brackets", {"function", "lower", "reference", "upper", "contained"}, {}};
  bool all_in = true;
  std::vector<MultiplicatorBracket> results(fns.size());
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const auto b = multiplicator_bracket(fns[i].f, space, grid_n);
    const double ref = norm(fns[i].f, mult).value;
    const bool in = b.lower <= 2.0 * ref && ref <= 2.0 * b.upper;
    all_in = all_in && in;
    brackets.rows.push_back({fns[i].name, b.lower, ref, b.upper, in});
  }
  ReportTable dil{"dilation_function", {"t", "closed_form", "numeric", "relative_deviation"}, {}};
  double worst = 0.0;
  for (int j = 0; j < 64; ++j) {
    const double t = std::exp2(-16.0 + 32.0 * j / 63.0);
    const double c = weight_dilation_sup(lam->weight, t);
    const double n = weight_dilation_sup_numeric(lam->weight, t);
    const double dev = std::fabs(c - n) / c;
    worst = std::max(worst, dev);
    dil.rows.push_back({t, c, n, dev});
  }
  r.tables.push_back(std::move(brackets));
  r.tables.push_back(std::move(dil));
  r.metrics = {{"all_contained", all_in}, {"max_dilation_deviation", worst}};
  r.passed = all_in && worst <= 1e-6;
  r.classification = pass_fail(r.passed);
  r.verdict = "multiplicator brackets " + std::string(all_in ? "contain" : "miss") +
              " the closed-form norm; dilation function deviation " + format_short(worst);
  return r;
}

VerdictReport verify_lemma22(double p, double a0, double a1, const std::vector<int>& levels) {
  VerdictReport r = start("verify lemma22", {{"p", p}, {"a0", a0}, {"a1", a1},
                                             {"levels", levels_field(levels)}});
  std::vector<std::size_t> sizes;
  for (int l : levels) sizes.push_back(std::size_t{1} << level_range(l, l).front());
  const auto rep = check_product_law(p, a0, a1, sizes);
  ReportTable t{"levels", {"level", "n", "distance", "ratio_min", "ratio_max"}, {}};
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    const auto& lv = rep.levels[i];
    t.rows.push_back({std::int64_t{levels[i]}, as_int(lv.n), lv.distance, lv.ratio_min, lv.ratio_max});
  }
  r.tables.push_back(std::move(t));
  const double last = rep.levels.empty() ? kInf : rep.levels.back().distance;
  r.metrics = {{"target_alpha", rep.target_alpha}, {"final_distance", last}};
  r.passed = rep.decreasing && last < 0.05;
  r.classification = rep.decreasing ? "decreasing" : "not-decreasing";
  r.verdict = "distance to psi_{p," + format_short(rep.target_alpha) + "} " +
              (rep.decreasing ? "decreases" : "does not decrease") + " under refinement, final " +
              format_short(last);
  return r;
}

VerdictReport verify_thm21(double p, double r_, double q, const std::vector<int>& levels,
                           const GrowthRule& rule, double delta, std::uint64_t seed) {
  if (!(p > 1.0 && std::isfinite(p) && p <= r_ && r_ <= q)) {
    throw PreconditionViolation("thm21 needs 1 < p <= r <= q <= inf");
  }
  const LorentzZygmund target = product_target(p, r_, q);
  const auto ex = interpolation_exponents(p, r_, q);
  VerdictReport r = start("verify thm21", {{"p", p}, {"r", r_}, {"q", q}, {"delta", delta},
                                           {"seed", static_cast<std::int64_t>(seed)},
                                           {"levels", levels_field(levels)}});
  const auto sweep = stock_ratio_sweep(p, r_, q, target, levels, rule, delta, seed);
  r.tables.push_back(sweep_table(sweep));
  r.metrics = {{"target", describe(target)}, {"s", ex.s}, {"theta", ex.theta}};
  add_growth_metrics(r, sweep);
  r.classification = to_string(sweep.growth.classification);
  r.passed = sweep.growth.classification == Classification::bounded;
  r.verdict = "stock ratio into " + describe(target) + " is " + r.classification;
  return r;
}

VerdictReport verify_thm25(double p, double r_, double q, double beta,
                           const std::vector<int>& levels, double delta,
                           const GrowthRule& rule) {
  VerdictReport r = start("verify thm25", {{"p", p}, {"r", r_}, {"q", q}, {"beta", beta},
                                           {"delta", delta}, {"levels", levels_field(levels)}});
  const auto sweep = log_growth_witness(p, r_, q, beta, levels, delta, rule);
  r.tables.push_back(sweep_table(sweep));
  add_growth_metrics(r, sweep);
  r.classification = to_string(sweep.growth.classification);
  r.passed = sweep.growth.classification == Classification::divergent && sweep.fit.slope > 0.0 &&
             sweep.fit.residual < 0.1;
  r.verdict = "witness ratio is " + r.classification + ", growth exponent " +
              format_short(sweep.fit.slope) + " in ln ln n";
  return r;
}

VerdictReport verify_cor27(double p, double r_, double q, const std::vector<int>& levels,
                           double delta, const GrowthRule& rule) {
  if (!(p > 1.0 && p <= r_ && r_ <= q && std::isfinite(q))) {
    throw PreconditionViolation("cor27 needs 1 < p <= r <= q < inf");
  }
  if (1.0 / r_ + 1.0 / q - 1.0 / p < -1e-12) {
    throw PreconditionViolation("cor27 needs 1/r + 1/q - 1/p >= 0");
  }
  VerdictReport r = start("verify cor27", {{"p", p}, {"r", r_}, {"q", q}, {"delta", delta},
                                           {"levels", levels_field(levels)}});
  ReportTable t{"levels", {"level", "n", "norm_lps", "norm_target", "ratio_lps", "ratio_target"}, {}};
  std::vector<double> sizes, rs, ra;
  MembershipReport last;
  for (int level : levels) {
    const std::size_t n = std::size_t{1} << level_range(level, level).front();
    const StepFunction x = sample_to_grid(SingularPowerLog{p, 1.0 / r_ + delta}, n);
    const StepFunction y = sample_to_grid(SingularPowerLog{p, 1.0 / q + delta}, n);
    last = intersection_membership(x, y, p, r_, q);
    t.rows.push_back({std::int64_t{level}, as_int(n), last.norm_lps, last.norm_target,
                      last.ratio_lps, last.ratio_target});
    sizes.push_back(static_cast<double>(n));
    rs.push_back(last.ratio_lps);
    ra.push_back(last.ratio_target);
  }
  r.tables.push_back(std::move(t));
  const auto gs = classify_growth(sizes, rs, rule);
  const auto ga = classify_growth(sizes, ra, rule);
  r.metrics = {{"s", last.s}, {"alpha", last.alpha},
               {"lps_classification", to_string(gs.classification)},
               {"target_classification", to_string(ga.classification)}};
  const bool both = gs.classification == Classification::bounded &&
                    ga.classification == Classification::bounded;
  r.classification = both ? "bounded"
                     : (gs.classification == Classification::divergent ||
                        ga.classification == Classification::divergent)
                         ? "divergent"
                         : "inconclusive";
  r.passed = both;
  r.verdict = "product of the psi pair stays in both L_{p,s} and the log target: " +
              std::string(both ? "yes" : "no");
  return r;
}

VerdictReport verify_thm114(const SpaceSpec& space, std::size_t m_max, std::size_t trials,
                            std::uint64_t seed, std::size_t grid_n, const GrowthRule& rule) {
  VerdictReport r = start("verify thm114",
                          {{"space", describe(space)}, {"m_max", as_int(m_max)},
                           {"trials", as_int(trials)}, {"seed", static_cast<std::int64_t>(seed)},
                           {"grid_n", as_int(grid_n)}});
  const auto rep = disjoint_sum_constant(space, m_max, trials, seed, grid_n);
  ReportTable t{"disjoint_sums", {"m", "constant", "argmax"}, {}};
  std::vector<double> ms, cs;
  for (const auto& lv : rep.levels) {
    t.rows.push_back({as_int(lv.m), lv.constant, lv.argmax});
    ms.push_back(static_cast<double>(lv.m));
    cs.push_back(lv.constant);
  }
  r.tables.push_back(std::move(t));
  const auto g = classify_growth(ms, cs, rule);
  const double factor = cs.size() > 1 ? cs.back() / cs.front() : 1.0;
  r.metrics = {{"constant", rep.constant}, {"growth_factor", factor}};
  r.classification = to_string(g.classification);
  r.passed = g.classification != Classification::inconclusive;
  r.verdict = "disjoint-sum constant " + format_short(rep.constant) + " (" + r.classification +
              " in m, growth factor " + format_short(factor) + ")";
  return r;
}

VerdictReport verify_cor112(double p, double q, std::size_t grid_n, std::size_t m_max,
                            std::size_t trials, std::uint64_t seed) {
  if (!(p > 1.0 && std::isfinite(p) && p <= q)) throw PreconditionViolation("cor112 needs 1 < p <= q");
  const SpaceSpec space = lpq_space(p, q);
  VerdictReport r = start("verify cor112", {{"p", p}, {"q", q}, {"grid_n", as_int(grid_n)},
                                            {"m_max", as_int(m_max)}, {"trials", as_int(trials)},
                                            {"seed", static_cast<std::int64_t>(seed)}});
  const auto fns = test_functions();
  ReportTable t{"brackets", {"function", "lower", "norm_p", "upper", "p_bound", "contained"}, {}};
  bool all_in = true;
  for (const auto& f : fns) {
    const auto b = multiplicator_bracket(f.f, space, grid_n, seed);
    const double np = lz_norm_value(rearrange(f.f), p, p, 0.0);
    const bool in = b.lower <= 4.0 * np && np <= 4.0 * b.upper;
    all_in = all_in && in;
    t.rows.push_back({f.name, b.lower, np, b.upper, b.p_bound ? Field{*b.p_bound} : Field{"none"}, in});
  }
  r.tables.push_back(std::move(t));
  const auto rep = disjoint_sum_constant(space, m_max, trials, seed, 64);
  ReportTable d{"disjoint_sums", {"m", "constant", "argmax"}, {}};
  for (const auto& lv : rep.levels) d.rows.push_back({as_int(lv.m), lv.constant, lv.argmax});
  r.tables.push_back(std::move(d));
  const double factor = rep.levels.size() > 1 ? rep.levels.back().constant / rep.levels.front().constant : 1.0;
  const bool grows = factor >= 1.05;
  r.metrics = {{"all_contained", all_in}, {"growth_factor", factor}, {"grows_in_m", grows}};
  r.passed = all_in && (q > p ? grows : true);
  r.classification = pass_fail(r.passed);
  r.verdict = "L_p norm inside the widened brackets: " + std::string(all_in ? "yes" : "no") +
              "; disjoint-sum constant growth factor " + format_short(factor);
  return r;
}

VerdictReport verify_oneil_regime(double p, double q, double r_, double s,
                                  const std::vector<int>& levels, const GrowthRule& rule,
                                  std::uint64_t seed) {
  const auto v = oneil_conditions(p, q, r_, s);
  if (v.bounded != Bounded::yes) {
    throw PreconditionViolation("the conditions fail (" +
                                (v.failing_condition.empty() ? std::string("parameter range")
                                                             : v.failing_condition) +
                                ")");
  }
  VerdictReport r = start("verify oneil", {{"p", p}, {"q", q}, {"r", r_}, {"s", s},
                                           {"levels", levels_field(levels)}});
  const auto sweep = stock_ratio_sweep(p, std::min(q, r_), std::max(q, r_), lpq_space(p, s), levels,
                                       rule, 0.01, seed);
  r.tables.push_back(sweep_table(sweep));
  add_growth_metrics(r, sweep);
  r.classification = to_string(sweep.growth.classification);
  r.passed = sweep.growth.classification == Classification::bounded;
  r.verdict = "stock ratio into L_{p,s} is " + r.classification;
  return r;
}

VerdictReport verify_incomparability(const std::vector<int>& levels, const GrowthRule& rule) {
  VerdictReport r = start("verify incomparability", {{"levels", levels_field(levels)}});
  const AnalyticFunction f = SingularPowerLog{2.0, 0.0};
  const SpaceSpec weak = lpq_space(2.0, kInf);
  const SpaceSpec logt = lz_space(2.0, 4.0, -0.25);
  ReportTable t{"levels", {"level", "n", "norm_weak", "norm_log_target", "growth_per_doubling"}, {}};
  std::vector<double> sizes, weak_v, log_v;
  for (int level : levels) {
    const std::size_t n = std::size_t{1} << level_range(level, level).front();
    const RearrangementProfile x = rearrange(sample_to_grid(f, n));
    sizes.push_back(static_cast<double>(n));
    weak_v.push_back(norm_value(x, weak));
    log_v.push_back(norm_value(x, logt));
  }
  const auto g = classify_growth(sizes, log_v, rule);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    t.rows.push_back({std::int64_t{levels[i]}, static_cast<std::int64_t>(sizes[i]), weak_v[i],
                      log_v[i], g.growth_per_doubling[i]});
  }
  r.tables.push_back(std::move(t));
  // (t^{1/2} / phi(t))^4 / 2 dominates ln(e/t), so it exceeds C at t = e^{1-C}.
  ReportTable fr{"fundamental_ratio", {"C", "t", "ratio"}, {}};
  bool crosses = true;
  for (double C : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0}) {
    const double lt = 1.0 - C;
    const double lphi = log_fundamental_function(logt, lt);
    const double ratio = 0.5 * std::exp(4.0 * (0.5 * lt - lphi));
    crosses = crosses && ratio >= C * (1.0 - 1e-9);
    fr.rows.push_back({C, std::exp(lt), ratio});
  }
  r.tables.push_back(std::move(fr));
  const double weak_max = *std::max_element(weak_v.begin(), weak_v.end());
  const bool weak_ok = weak_max <= 1.0 + 1e-6;
  const bool diverges = g.classification == Classification::divergent;
  r.metrics = {{"max_norm_weak", weak_max},
               {"log_target_classification", to_string(g.classification)},
               {"fundamental_ratio_crosses", crosses}};
  r.passed = weak_ok && diverges && crosses;
  r.classification = to_string(g.classification);
  r.verdict = "weak-type norm max " + format_short(weak_max) + "; log-target norm " +
              to_string(g.classification) + "; fundamental ratio crosses every C: " +
              (crosses ? "yes" : "no");
  return r;
}

bool is_verification_id(const std::string& id) {
  static const char* ids[] = {"eq2",   "thm12", "ex11",  "lemma22", "thm21",
                              "thm25", "cor27", "cor112", "thm114"};
  return std::any_of(std::begin(ids), std::end(ids), [&](const char* s) { return id == s; });
}

VerdictReport run_verification(const std::string& id, const VerifyParams& v) {
  if (id == "eq2") return verify_eq2(v.space, dyadic_grid(-10, 0), v.grid_n);
  if (id == "thm12") return verify_thm12(v.space, dyadic_grid(-10, 10));
  if (id == "ex11") return verify_ex11(v.space, v.grid_n);
  if (id == "lemma22") return verify_lemma22(v.p, v.a0, v.a1, or_default(v.levels, 10, 16));
  if (id == "thm21") return verify_thm21(v.p, v.r, v.q, or_default(v.levels, 10, 16), v.rule, v.delta, v.seed);
  if (id == "thm25") {
    return verify_thm25(v.p, v.r, v.q, v.beta, or_default(v.levels, 10, 18), v.delta, v.rule);
  }
  if (id == "cor27") return verify_cor27(v.p, v.r, v.q, or_default(v.levels, 10, 16), v.delta, v.rule);
  if (id == "cor112") return verify_cor112(v.p, v.q, v.grid_n, v.m_max, v.trials, v.seed);
  if (id == "thm114") {
    const SpaceSpec space = v.has_space ? v.space : lp_space(v.p);
    return verify_thm114(space, v.m_max, v.trials, v.seed, 64, v.rule);
  }
  throw InvalidArgument("unknown verification id \"" + id + "\"");
}

}  // namespace symspace
