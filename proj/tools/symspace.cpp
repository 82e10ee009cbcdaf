#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symspace/errors.hpp"
#include "symspace/json_io.hpp"
#include "symspace/multiplicator.hpp"
#include "symspace/numeric.hpp"
#include "symspace/parallel.hpp"
#include "symspace/report.hpp"
#include "symspace/tensor.hpp"
#include "symspace/verify.hpp"

using namespace symspace;

namespace {

constexpr std::size_t kMaxGrid = std::size_t{1} << 20;
constexpr int kMaxLevel = 20;

enum class Format { json, csv };

struct Common {
  std::string out = "";
  std::string output;
  bool timing = false;
  double threshold = GrowthRule{}.per_doubling;
  int consecutive = static_cast<int>(GrowthRule{}.consecutive);
};

GrowthRule rule_of(const Common& c) {
  if (!(c.threshold > 0.0) || c.consecutive < 1) {
    throw InvalidArgument("--threshold must be positive and --consecutive at least 1");
  }
  return GrowthRule{c.threshold, static_cast<std::size_t>(c.consecutive)};
}

void check_grid(std::size_t n) {
  if (n < 4) throw InvalidArgument("--grid must be at least 4");
  if (n > kMaxGrid) throw ResourceLimit("--grid exceeds the cap 2^20");
}

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw InvalidArgument("not an integer: \"" + s + "\"");
  return v;
}

// "a:b" or "a:b:step"
std::vector<int> parse_levels(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) throw InvalidArgument("--levels expects a:b[:step]");
  const int lo = parse_int(parts[0]);
  const int hi = parse_int(parts[1]);
  const int step = parts.size() == 3 ? parse_int(parts[2]) : 1;
  if (lo < 2 || step < 1) throw InvalidArgument("--levels must start at 2 or above with a positive step");
  if (hi < lo) throw ResourceLimit("--levels " + text + " is empty");
  if (hi > kMaxLevel) throw ResourceLimit("--levels above 20 exceed the grid cap 2^20");
  return level_range(lo, hi, step);
}

// Comma-separated extended reals, e.g. "2,4,inf".
std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(parse_extended(part));
  return out;
}

double extended_option(const std::string& text, const char* name) {
  try {
    return parse_extended(text);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(name) + ": " + e.what());
  }
}

void emit(VerdictReport report, const Common& c, Format fallback,
          std::chrono::steady_clock::time_point started) {
  if (c.timing) {
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  Format f = fallback;
  if (c.out == "json") f = Format::json;
  else if (c.out == "csv") f = Format::csv;
  else if (!c.out.empty()) throw InvalidArgument("--out must be json or csv");
  const std::string text = f == Format::json ? to_json(report) : to_csv(report);
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open " + c.output + " for writing");
    file << text;
  }
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out", c.out, "json or csv");
  app->add_option("--output", c.output, "write the report to this path");
  app->add_flag("--timing", c.timing, "record wall time in the report");
  app->add_option("--threshold", c.threshold, "growth per doubling counted as growth");
  app->add_option("--consecutive", c.consecutive, "doublings of growth needed for divergence");
}

VerdictReport norm_report(const std::string& command, const NormResult& n, Field fn, Field space) {
  VerdictReport r;
  r.command = command;
  r.parameters = {{"function", std::move(fn)}, {"space", std::move(space)}};
  r.metrics = {{"value", n.value},
               {"lower_bracket", n.lower_bracket},
               {"upper_bracket", n.upper_bracket},
               {"grid_n", static_cast<std::int64_t>(n.grid_n)},
               {"divergent", n.divergent}};
  r.classification = n.divergent ? "divergent" : "bounded";
  r.passed = true;
  r.verdict = n.divergent ? "norm diverges under refinement" : "norm " + format_short(n.value);
  return r;
}

StepFunction as_step(const FunctionInput& in, std::size_t grid) {
  if (const auto* s = std::get_if<StepFunction>(&in)) return *s;
  return sample_to_grid(std::get<AnalyticFunction>(in), grid);
}

struct SweepRow {
  double p, q, r, s;
  BoundednessVerdict verdict;
  RatioSweep sweep;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric function spaces: norms, tensor products and multiplicators"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Common common;
  const auto started = std::chrono::steady_clock::now();

  std::string fn_arg, space_arg, x_arg, y_arg;
  std::size_t grid = 4096;
  std::string p_s = "2", q_s = "4", r_s = "4", s_s = "inf", beta_s = "0.01";
  std::string levels_s;
  double delta = 0.01, a0 = 0.0, a1 = 0.0;
  std::uint64_t seed = 7;
  std::size_t m_max = 64, trials = 100, candidates = 1024;
  std::size_t cap = 4096;
  std::string verify_id;
  std::string p_list, q_list, r_list, s_list, beta_list;

  auto* c_norm = app.add_subcommand("norm", "norm of a function in a space");
  c_norm->add_option("--fn", fn_arg, "function JSON or path")->required();
  c_norm->add_option("--space", space_arg, "space JSON or path")->required();
  c_norm->add_option("--grid", grid, "cells for sampled functions");

  auto* c_rearr = app.add_subcommand("rearrange", "decreasing rearrangement of a function");
  c_rearr->add_option("--fn", fn_arg, "function JSON or path")->required();
  c_rearr->add_option("--grid", grid, "cells for sampled functions");

  auto* c_tensor = app.add_subcommand("tensor-norm", "norm of x(s) y(t) in a space");
  c_tensor->add_option("--x", x_arg, "function JSON or path")->required();
  c_tensor->add_option("--y", y_arg, "function JSON or path")->required();
  c_tensor->add_option("--space", space_arg, "space JSON or path")->required();
  c_tensor->add_option("--grid", grid, "cells for sampled functions");

  auto* c_oneil = app.add_subcommand("oneil", "boundedness of L_pr x L_pq -> L_ps");
  auto* c_witness = app.add_subcommand("witness", "logarithmic growth witness");
  auto* c_mult = app.add_subcommand("multiplicator", "bracket of the multiplicator norm");
  c_mult->add_option("--x", x_arg, "function JSON or path")->required();
  c_mult->add_option("--space", space_arg, "space JSON or path")->required();
  c_mult->add_option("--candidates", candidates, "cells of the sampled candidate family");
  c_mult->add_option("--grid", grid, "cells for sampled functions");

  auto* c_k = app.add_subcommand("k-check", "disjoint-sum constant against m");
  c_k->add_option("--space", space_arg, "space JSON or path")->required();
  c_k->add_option("--m-max", m_max);
  c_k->add_option("--trials", trials);

  auto* c_verify = app.add_subcommand("verify", "run a named verification");
  c_verify->add_option("id", verify_id, "eq2 thm12 ex11 lemma22 thm21 thm25 cor27 cor112 thm114")
      ->required();
  c_verify->add_option("--space", space_arg, "space JSON or path");
  c_verify->add_option("--a0", a0);
  c_verify->add_option("--a1", a1);
  c_verify->add_option("--m-max", m_max);
  c_verify->add_option("--trials", trials);
  c_verify->add_option("--grid", grid, "cells for sampled functions");

  auto* c_sweep = app.add_subcommand("sweep", "parameter grid over (p,q,r,s) or beta");
  c_sweep->add_option("--p", p_list, "comma-separated values");
  c_sweep->add_option("--q", q_list, "comma-separated values");
  c_sweep->add_option("--r", r_list, "comma-separated values");
  c_sweep->add_option("--s", s_list, "comma-separated values");
  c_sweep->add_option("--beta", beta_list, "comma-separated values; switches to the beta scan");
  c_sweep->add_option("--cap", cap, "largest number of tuples");

  for (auto* c : {c_oneil, c_witness, c_verify}) {
    c->add_option("--p", p_s);
    c->add_option("--q", q_s);
    c->add_option("--r", r_s);
  }
  c_oneil->add_option("--s", s_s);
  for (auto* c : {c_witness, c_verify}) c->add_option("--beta", beta_s);
  for (auto* c : {c_witness, c_verify, c_sweep}) {
    c->add_option("--levels", levels_s, "a:b[:step] in log2 of the grid size");
    c->add_option("--delta", delta, "offset of the psi exponents into the interior");
  }
  for (auto* c : {c_mult, c_k, c_verify, c_sweep}) c->add_option("--seed", seed);
  for (auto* c : app.get_subcommands({})) add_common(c, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const GrowthRule rule = rule_of(common);
    if (c_norm->parsed()) {
      check_grid(grid);
      const auto fn = parse_function(read_json_argument(fn_arg));
      const SpaceSpec space = parse_space(read_json_argument(space_arg));
      NormResult n;
      if (const auto* s = std::get_if<StepFunction>(&fn)) {
        n = norm(*s, space);
      } else {
        n = analytic_norm(std::get<AnalyticFunction>(fn), space, grid, rule);
      }
      emit(norm_report("norm", n, fn_arg, describe(space)), common, Format::json, started);
    } else if (c_rearr->parsed()) {
      check_grid(grid);
      const auto prof = rearrange(as_step(parse_function(read_json_argument(fn_arg)), grid));
      VerdictReport r;
      r.command = "rearrange";
      r.parameters = {{"function", fn_arg}};
      ReportTable t{"rearrangement", {"value", "measure", "breakpoint"}, {}};
      for (std::size_t i = 0; i < prof.size(); ++i) {
        t.rows.push_back({prof.values()[i], prof.measures()[i], prof.breakpoints()[i]});
      }
      r.tables.push_back(std::move(t));
      r.metrics = {{"cells", static_cast<std::int64_t>(prof.size())},
                   {"support", prof.support()},
                   {"integral", prof.integral()}};
      r.classification = "pass";
      r.passed = true;
      r.verdict = "rearranged " + std::to_string(prof.size()) + " cells";
      emit(r, common, Format::json, started);
    } else if (c_tensor->parsed()) {
      check_grid(grid);
      const StepFunction x = as_step(parse_function(read_json_argument(x_arg)), grid);
      const StepFunction y = as_step(parse_function(read_json_argument(y_arg)), grid);
      const SpaceSpec space = parse_space(read_json_argument(space_arg));
      const NormResult n = tensor_norm(x, y, space);
      VerdictReport r = norm_report("tensor-norm", n, x_arg, describe(space));
      r.parameters.insert(r.parameters.begin() + 1, {"y", y_arg});
      r.parameters.front().first = "x";
      emit(r, common, Format::json, started);
    } else if (c_oneil->parsed()) {
      const double p = extended_option(p_s, "--p"), q = extended_option(q_s, "--q");
      const double r_ = extended_option(r_s, "--r"), s = extended_option(s_s, "--s");
      const auto v = oneil_conditions(p, q, r_, s);
      VerdictReport r;
      r.command = "oneil";
      r.parameters = {{"p", p}, {"q", q}, {"r", r_}, {"s", s}};
      r.metrics = {{"bounded", to_string(v.bounded)},
                   {"failing_condition", v.failing_condition.empty() ? "none" : v.failing_condition}};
      r.classification = v.bounded == Bounded::yes ? "bounded"
                         : v.bounded == Bounded::no  ? "unbounded"
                                                     : "out-of-range";
      r.passed = true;
      r.verdict = v.bounded == Bounded::yes ? "L_pr x L_pq -> L_ps is bounded"
                  : v.bounded == Bounded::no ? "unbounded: " + v.failing_condition + " fails"
                                             : "outside the parameter range";
      emit(r, common, Format::json, started);
    } else if (c_witness->parsed()) {
      const std::vector<int> levels = levels_s.empty() ? level_range(10, 18) : parse_levels(levels_s);
      VerdictReport r = verify_thm25(extended_option(p_s, "--p"), extended_option(r_s, "--r"),
                                     extended_option(q_s, "--q"), extended_option(beta_s, "--beta"),
                                     levels, delta, rule);
      r.command = "witness";
      ReportTable& t = r.tables.front();
      ReportTable slim{"levels", {"level", "n", "ratio", "fitted_exponent"}, {}};
      for (const auto& row : t.rows) slim.rows.push_back({row[0], row[1], row[2], row[4]});
      t = std::move(slim);
      emit(r, common, Format::csv, started);
    } else if (c_mult->parsed()) {
      check_grid(grid);
      check_grid(candidates);
      const StepFunction x = as_step(parse_function(read_json_argument(x_arg)), grid);
      const SpaceSpec space = parse_space(read_json_argument(space_arg));
      const auto b = multiplicator_bracket(x, space, candidates, seed);
      VerdictReport r;
      r.command = "multiplicator";
      r.parameters = {{"x", x_arg}, {"space", describe(space)},
                      {"candidates", static_cast<std::int64_t>(candidates)},
                      {"seed", static_cast<std::int64_t>(seed)}};
      r.metrics = {{"lower", b.lower}, {"upper", b.upper},
                   {"p_bound", b.p_bound ? Field{*b.p_bound} : Field{"none"}},
                   {"lower_argmax", b.lower_argmax}, {"boyd_lower", b.boyd_lower}};
      r.classification = "pass";
      r.passed = b.lower <= b.upper * (1.0 + 1e-12);
      r.verdict = "multiplicator norm in [" + format_short(b.lower) + ", " + format_short(b.upper) + "]";
      emit(r, common, Format::json, started);
    } else if (c_k->parsed()) {
      const SpaceSpec space = parse_space(read_json_argument(space_arg));
      if (m_max < 2) throw ResourceLimit("--m-max below 2 leaves no levels");
      VerdictReport r = verify_thm114(space, m_max, trials, seed, 64, rule);
      r.command = "k-check";
      emit(r, common, Format::csv, started);
    } else if (c_verify->parsed()) {
      if (!is_verification_id(verify_id)) throw InvalidArgument("unknown verification id \"" + verify_id + "\"");
      VerifyParams v;
      v.p = extended_option(p_s, "--p");
      v.q = extended_option(q_s, "--q");
      v.r = extended_option(r_s, "--r");
      v.beta = extended_option(beta_s, "--beta");
      v.a0 = a0;
      v.a1 = a1;
      v.delta = delta;
      v.seed = seed;
      v.m_max = m_max;
      v.trials = trials;
      v.rule = rule;
      if (!levels_s.empty()) v.levels = parse_levels(levels_s);
      if (c_verify->count("--grid") > 0) {
        check_grid(grid);
        v.grid_n = grid;
      }
      if (!space_arg.empty()) {
        v.space = parse_space(read_json_argument(space_arg));
        v.has_space = true;
      }
      emit(run_verification(verify_id, v), common, Format::csv, started);
    } else if (c_sweep->parsed()) {
      const std::vector<int> levels = levels_s.empty() ? level_range(10, 13) : parse_levels(levels_s);
      const auto ps = parse_list(p_list), qs = parse_list(q_list), rs = parse_list(r_list);
      VerdictReport rep;
      rep.parameters = {{"p", p_list}, {"q", q_list}, {"r", r_list}};
      rep.passed = true;
      rep.classification = "pass";
      if (!beta_list.empty()) {
        auto betas = parse_list(beta_list);
        std::sort(betas.begin(), betas.end());
        if (ps.size() != 1 || qs.size() != 1 || rs.size() != 1) {
          throw InvalidArgument("the beta scan takes one value each of --p, --q, --r");
        }
        if (betas.size() > cap) throw ResourceLimit("sweep grid exceeds --cap");
        rep.command = "sweep beta";
        rep.parameters.push_back({"beta", beta_list});
        const double critical = 1.0 / rs[0] - 1.0 / ps[0];
        ReportTable t{"sweep", {"beta", "offset", "top_level", "ratio", "growth_exponent", "fit_residual",
                                "classification"}, {}};
        for (double beta : betas) {
          const auto sw = psi_pair_sweep(ps[0], rs[0], qs[0], beta, levels, delta, rule);
          t.rows.push_back({beta, beta - critical, std::int64_t{sw.levels.back().level},
                            sw.levels.back().ratio, sw.fit.slope, sw.fit.residual,
                            to_string(sw.growth.classification)});
        }
        rep.tables.push_back(std::move(t));
        rep.metrics = {{"critical_beta", critical}};
        rep.verdict = "beta scan of " + std::to_string(betas.size()) + " values";
      } else {
        auto ss = parse_list(s_list);
        std::vector<SweepRow> rows;
        for (double p : ps)
          for (double q : qs)
            for (double r_ : rs)
              for (double s : ss) rows.push_back({p, q, r_, s, {}, {}});
        if (rows.empty()) throw ResourceLimit("sweep grid is empty");
        if (rows.size() > cap) throw ResourceLimit("sweep grid exceeds --cap");
        std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
          return std::tie(a.p, a.q, a.r, a.s) < std::tie(b.p, b.q, b.r, b.s);
        });
        rep.command = "sweep";
        rep.parameters.push_back({"s", s_list});
        ReportTable t{"sweep", {"p", "q", "r", "s", "oneil", "failing_condition", "top_level", "ratio",
                                "growth_exponent", "classification"}, {}};
        std::size_t bounded = 0;
        for (auto& row : rows) {
          row.verdict = oneil_conditions(row.p, row.q, row.r, row.s);
          const bool sweepable = row.p > 1.0 && std::isfinite(row.p) &&
                                 row.p <= std::min(row.q, row.r) && row.s >= 1.0;
          if (row.verdict.bounded == Bounded::yes) ++bounded;
          std::vector<Field> cells{row.p, row.q, row.r, row.s, to_string(row.verdict.bounded),
                                   row.verdict.failing_condition.empty() ? "none"
                                                                         : row.verdict.failing_condition};
          if (sweepable) {
            row.sweep = stock_ratio_sweep(row.p, std::min(row.q, row.r), std::max(row.q, row.r),
                                          lpq_space(row.p, row.s), levels, rule, delta, seed);
            cells.insert(cells.end(), {std::int64_t{row.sweep.levels.back().level},
                                       row.sweep.levels.back().ratio, row.sweep.fit.slope,
                                       to_string(row.sweep.growth.classification)});
          } else {
            cells.insert(cells.end(), {std::int64_t{0}, kInf, kInf, "not-computed"});
          }
          t.rows.push_back(std::move(cells));
        }
        rep.tables.push_back(std::move(t));
        rep.metrics = {{"tuples", static_cast<std::int64_t>(rows.size())},
                       {"bounded_tuples", static_cast<std::int64_t>(bounded)}};
        rep.verdict = std::to_string(bounded) + " of " + std::to_string(rows.size()) +
                      " tuples satisfy the boundedness conditions";
      }
      rep.parameters.push_back({"levels", levels_s.empty() ? std::string("10:13") : levels_s});
      emit(rep, common, Format::csv, started);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 3;
  } catch (const ConstraintViolation& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
