#include <catch_amalgamated.hpp>

#include <cmath>

#include "json.hpp"
#include "symspace/errors.hpp"
#include "symspace/json_io.hpp"
#include "symspace/numeric.hpp"
#include "symspace/report.hpp"

using namespace symspace;

namespace {

VerdictReport sample_report() {
  VerdictReport r;
  r.command = "verify demo";
  r.parameters = {{"p", 2.0}, {"levels", std::string("10 11")}};
  r.tables.push_back({"levels", {"level", "ratio"}, {{std::int64_t{10}, 0.1}, {std::int64_t{11}, kInf}}});
  r.metrics = {{"ok", true}};
  r.classification = "bounded";
  r.passed = true;
  r.verdict = "fine";
  return r;
}

}  // namespace

TEST_CASE("CSV reports carry a versioned header and full precision") {
  const std::string csv = to_csv(sample_report());
  CHECK(csv.rfind("# symspace-report v1\n", 0) == 0);
  CHECK(csv.find("# command: verify demo") != std::string::npos);
  CHECK(csv.find("level,ratio\n10,0.10000000000000001\n11,+inf\n") != std::string::npos);
  CHECK(csv.find("# classification: bounded") != std::string::npos);
  CHECK(csv.find("wall_time") == std::string::npos);
}

TEST_CASE("JSON reports parse and encode infinities as strings") {
  auto r = sample_report();
  r.wall_time = 1.5;
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["command"] == "verify demo");
  CHECK(j["version"] == kVersion);
  CHECK(j["tables"]["levels"][1]["ratio"] == "+inf");
  CHECK(j["tables"]["levels"][0]["ratio"].get<double>() == 0.1);
  CHECK(j["wall_time_s"].get<double>() == 1.5);
}

TEST_CASE("function and space JSON") {
  const auto f = parse_function(R"({"kind":"step","cells":[[0.5,1],[0.25,-3]]})");
  REQUIRE(std::holds_alternative<StepFunction>(f));
  CHECK(std::get<StepFunction>(f).size() == 2);
  const auto g = parse_function(R"({"kind":"psi","p":2,"alpha":0.5})");
  REQUIRE(std::holds_alternative<AnalyticFunction>(g));
  const auto s = parse_space(R"({"space":"lpq","p":2,"q":"inf"})");
  CHECK(std::isinf(std::get<LorentzZygmund>(s).q));
  const auto lam = parse_space(R"({"space":"lambda","weight":{"variant":"remark","alpha":0.5,"C":30}})");
  CHECK(std::holds_alternative<LogDampedWeight>(std::get<LambdaSpace>(lam).weight));
  const auto back = parse_function(function_to_json(std::get<StepFunction>(f)));
  CHECK(std::get<StepFunction>(back).cells().size() == 2);
}

TEST_CASE("malformed input is reported with its position") {
  try {
    parse_function(R"({"kind":"step",)");
    FAIL("expected an exception");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("at byte") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_space(R"({"space":"bogus"})"), InvalidArgument);
  CHECK_THROWS_AS(parse_function(R"({"kind":"step","cells":[[2,1]]})"), InvalidArgument);
  CHECK(std::isinf(parse_extended("inf")));
  CHECK(parse_extended("2.5") == 2.5);
  CHECK_THROWS_AS(parse_extended("abc"), InvalidArgument);
}
