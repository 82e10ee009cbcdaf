#include "symspace/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symspace/errors.hpp"
#include "symspace/numeric.hpp"
#include "symspace/report.hpp"

namespace symspace {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

double number(const json& j, const char* name) {
  if (!j.contains(name)) throw InvalidArgument(std::string("missing field \"") + name + "\"");
  const json& v = j.at(name);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_extended(v.get<std::string>());
  throw InvalidArgument(std::string("field \"") + name + "\" must be a number");
}

double number_or(const json& j, const char* name, double fallback) {
  return j.contains(name) ? number(j, name) : fallback;
}

std::string text_field(const json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_string()) {
    throw InvalidArgument(std::string("missing string field \"") + name + "\"");
  }
  return j.at(name).get<std::string>();
}

Weight weight_from(const json& j) {
  if (!j.is_object()) throw InvalidArgument("weight must be a JSON object");
  const std::string variant = text_field(j, "variant");
  Weight w;
  if (variant == "power") {
    w = PowerWeight{number(j, "gamma")};
  } else if (variant == "powerlog") {
    w = PowerLogWeight{number(j, "p"), number(j, "alpha")};
  } else if (variant == "remark") {
    w = LogDampedWeight{number(j, "alpha"), number(j, "C")};
  } else {
    throw InvalidArgument("unknown weight variant \"" + variant + "\"");
  }
  validate(w);
  return w;
}

}  // namespace

double parse_extended(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "Infinity") return kInf;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("not a number: \"" + text + "\"");
  }
  if (pos != text.size() || std::isnan(v)) throw InvalidArgument("not a number: \"" + text + "\"");
  return v;
}

std::string read_json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw InvalidArgument("cannot read JSON file \"" + arg + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FunctionInput parse_function(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw InvalidArgument("function must be a JSON object");
  const std::string kind = text_field(j, "kind");
  if (kind == "step") {
    if (!j.contains("cells") || !j.at("cells").is_array()) {
      throw InvalidArgument("step function needs a \"cells\" array");
    }
    std::vector<Cell> cells;
    for (const json& c : j.at("cells")) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
        throw InvalidArgument("each cell must be [measure, value]");
      }
      cells.push_back({c[0].get<double>(), c[1].get<double>()});
    }
    return StepFunction(std::move(cells));
  }
  if (kind == "psi") {
    SingularPowerLog f{number(j, "p"), number(j, "alpha")};
    if (!(f.p > 1.0) || !std::isfinite(f.p)) throw InvalidArgument("p must lie in (1, inf)");
    return AnalyticFunction{f};
  }
  if (kind == "constant") return AnalyticFunction{ConstantFunction{number_or(j, "value", 1.0)}};
  if (kind == "indicator") {
    const double t = number(j, "t");
    if (!(t > 0.0 && t <= 1.0)) throw InvalidArgument("indicator measure must lie in (0,1]");
    return AnalyticFunction{IndicatorFunction{t, number_or(j, "value", 1.0)}};
  }
  throw InvalidArgument("unknown function kind \"" + kind + "\"");
}

SpaceSpec parse_space(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw InvalidArgument("space must be a JSON object");
  const std::string kind = text_field(j, "space");
  if (kind == "lambda") {
    if (!j.contains("weight")) throw InvalidArgument("lambda space needs a \"weight\"");
    return lambda_space(weight_from(j.at("weight")));
  }
  if (kind == "lp") return lp_space(number(j, "p"));
  if (kind == "lpq") return lpq_space(number(j, "p"), number(j, "q"));
  if (kind == "lz" || kind == "lz0") {
    const bool closure = kind == "lz0" || (j.contains("closure") && j.at("closure").is_boolean() &&
                                           j.at("closure").get<bool>());
    const double p = number(j, "p");
    const double q = number(j, "q");
    const double alpha = number_or(j, "alpha", 0.0);
    return closure ? lz0_space(p, q, alpha) : lz_space(p, q, alpha);
  }
  throw InvalidArgument("unknown space \"" + kind + "\"");
}

Weight parse_weight(const std::string& text) { return weight_from(parse_text(text)); }

std::string function_to_json(const StepFunction& f) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value("step");
  w.key("cells").begin_array();
  for (const Cell& c : f.cells()) {
    w.begin_array();
    w.value(c.measure);
    w.value(c.value);
    w.end_array();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace symspace
