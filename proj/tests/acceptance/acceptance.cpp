// One PASS/FAIL line per acceptance criterion. Run with --criterion N, or with
// no arguments for all of them. Exit status is nonzero when any selected
// criterion fails or exceeds its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symspace/multiplicator.hpp"
#include "symspace/numeric.hpp"
#include "symspace/report.hpp"
#include "symspace/spaces.hpp"
#include "symspace/step_function.hpp"
#include "symspace/verify.hpp"

using namespace symspace;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const std::pair<double, double> kRemarkFamily[] = {{0.3, 2.0}, {0.5, 3.0}, {0.7, 4.0}};

SpaceSpec remark_space(double alpha, double log_c) {
  return lambda_space(LogDampedWeight{alpha, std::exp(log_c)});
}

std::string num(double v) { return format_short(v); }

// Random step function with up to 1000 cells; about a third of the values
// repeat so coalescing is exercised, and signs are mixed.
StepFunction random_function(Rng& rng) {
  const auto n = static_cast<std::size_t>(1 + std::floor(rng.uniform() * 999.999));
  std::vector<double> m(n);
  double total = 0.0;
  for (auto& x : m) total += (x = rng.uniform());
  const double fill = rng.uniform();
  std::vector<Cell> cells(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = rng.uniform() < 0.35 ? std::round(rng.uniform() * 20.0) / 4.0
                                    : std::exp(8.0 * (rng.uniform() - 0.5));
    if (rng.uniform() < 0.5) v = -v;
    cells[i] = {m[i] / total * fill, v};
  }
  return StepFunction(std::move(cells));
}

Outcome criterion1() {
  Rng rng(2024);
  double worst = 0.0;
  std::size_t jumps = 0;
  for (int k = 0; k < 10000; ++k) {
    const StepFunction x = random_function(rng);
    // Oracle: aggregate measure per distinct |value|, then suffix sums.
    std::map<double, double> by_value;
    for (const auto& c : x.cells()) by_value[std::fabs(c.value)] += c.measure;
    const RearrangementProfile r = rearrange(x);
    CompensatedSum above;
    for (auto it = by_value.rbegin(); it != by_value.rend(); ++it) {
      const double tau = it->first;
      const double expect = above.value();
      worst = std::max(worst, std::fabs(distribution(r, tau) - expect));
      above.add(it->second);
      ++jumps;
    }
  }
  return {worst <= 1e-12, "max |difference| " + num(worst) + " over " + std::to_string(jumps) + " jumps"};
}

Outcome criterion2() {
  bool ok = true;
  std::string detail;
  for (const auto& [a, c] : kRemarkFamily) {
    const auto r = verify_ex11(remark_space(a, c), 1024);
    ok = ok && r.passed;
    detail += "alpha=" + num(a) + ": " + r.verdict + "; ";
  }
  return {ok, detail};
}

Outcome criterion3() {
  bool ok = true;
  std::string detail;
  for (const auto& [a, c] : kRemarkFamily) {
    const auto e = verify_eq2(remark_space(a, c), dyadic_grid(-10, 0), 1024);
    const auto t = verify_thm12(remark_space(a, c), dyadic_grid(1, 10));
    ok = ok && e.passed && t.passed;
    detail += "alpha=" + num(a) + ": " + e.verdict + ", dilation transfer " +
              (t.passed ? "holds" : "fails") + "; ";
  }
  return {ok, detail};
}

Outcome criterion4() {
  bool ok = true;
  double worst = 0.0;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto rep = disjoint_sum_constant(lp_space(p), 64, 100, 7);
    for (const auto& lv : rep.levels) {
      worst = std::max(worst, std::fabs(lv.constant - 1.0));
      ok = ok && std::fabs(lv.constant - 1.0) <= 1e-10;
    }
  }
  return {ok, "max |C - 1| = " + num(worst)};
}

Outcome criterion5() {
  const double tuples[][4] = {{2, 2, 2, 2}, {2, 4, 4, kInf}, {2, 4, 2, 4}, {3, 3, 3, 3}};
  bool ok = true;
  std::string detail;
  for (const auto& t : tuples) {
    const auto r = verify_oneil_regime(t[0], t[1], t[2], t[3], level_range(10, 16), GrowthRule{}, 7);
    ok = ok && r.classification == "bounded";
    detail += "(" + num(t[0]) + "," + num(t[1]) + "," + num(t[2]) + "," + num(t[3]) + ") " +
              r.classification + "; ";
  }
  return {ok, detail};
}

Outcome criterion6() {
  bool ok = true;
  std::string detail;
  for (const auto& [r_, q] : {std::pair{4.0, 4.0}, std::pair{kInf, kInf}}) {
    const auto r = verify_thm21(2.0, r_, q, level_range(10, 16), GrowthRule{}, 0.01, 7);
    ok = ok && r.classification == "bounded";
    detail += r.verdict + "; ";
  }
  return {ok, detail};
}

Outcome criterion7() {
  bool ok = true;
  std::string detail;
  for (double beta : {0.01, 0.1}) {
    const auto r = verify_thm25(2.0, 4.0, 4.0, beta, level_range(10, 18), 0.01, GrowthRule{});
    ok = ok && r.passed;
    double slope = 0.0, resid = 0.0;
    for (const auto& [k, v] : r.metrics) {
      if (k == "fitted_exponent") slope = std::get<double>(v);
      if (k == "fit_residual") resid = std::get<double>(v);
    }
    detail += "beta=" + num(beta) + ": " + r.classification + ", exponent " + num(slope) +
              ", residual " + num(resid) + "; ";
  }
  return {ok, detail};
}

Outcome criterion8() {
  const double cases[][3] = {{2, 0, 0}, {2, 0.25, 0}, {3, 1.0 / 6.0, -1}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto r = verify_lemma22(c[0], c[1], c[2], level_range(10, 16));
    ok = ok && r.passed;
    detail += r.verdict + "; ";
  }
  return {ok, detail};
}

Outcome criterion9() {
  const auto r = verify_cor112(2.0, 4.0, 1024, 64, 100, 7);
  return {r.passed, r.verdict};
}

Outcome criterion10() {
  const auto r = verify_incomparability(level_range(10, 20), GrowthRule{});
  return {r.passed, r.verdict};
}

std::vector<std::string> suite_reports() {
  VerifyParams v;
  std::vector<std::string> out;
  for (const char* id : {"eq2", "thm12", "ex11", "lemma22", "thm21", "thm25", "cor27", "cor112",
                         "thm114"}) {
    const auto r = run_verification(id, v);
    out.push_back(to_csv(r));
    out.push_back(to_json(r));
  }
  out.push_back(to_csv(verify_oneil_regime(2, 4, 2, 4, level_range(10, 16), GrowthRule{}, 7)));
  out.push_back(to_csv(verify_incomparability(level_range(10, 20), GrowthRule{})));
  return out;
}

Outcome criterion11() {
  setenv("SYMSPACE_THREADS", "1", 1);
  const auto first = suite_reports();
  setenv("SYMSPACE_THREADS", "4", 1);
  const auto second = suite_reports();
  unsetenv("SYMSPACE_THREADS");
  std::size_t same = 0, bytes = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    same += first[i] == second[i];
    bytes += first[i].size();
  }
  return {same == first.size(), std::to_string(same) + "/" + std::to_string(first.size()) +
                                    " reports byte-identical (" + std::to_string(bytes) + " bytes)"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "rearrangement exactness", 10, criterion1},
      {2, "multiplicator of the log-damped Lorentz space", 60, criterion2},
      {3, "fundamental identity and dilation transfer", 60, criterion3},
      {4, "disjoint-sum constant in L_p", 30, criterion4},
      {5, "bounded regime for L_pr x L_pq -> L_ps", 300, criterion5},
      {6, "bounded product into the log target", 300, criterion6},
      {7, "logarithmic growth witness", 300, criterion7},
      {8, "product law of singular functions", 120, criterion8},
      {9, "multiplicator of L_{2,4}", 120, criterion9},
      {10, "weak L_2 and the log target are incomparable", 60, criterion10},
      {11, "deterministic reports", 600, criterion11},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }
  bool all_pass = true;
  bool found = false;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    found = true;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("criterion %d (%s): %s [%.2fs of %.0fs]%s\n  %s\n", c.id, c.name,
                pass ? "PASS" : "FAIL", secs, c.budget_s, in_time ? "" : " over budget",
                o.detail.c_str());
    std::fflush(stdout);
  }
  if (!found) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_pass ? 0 : 1;
}
