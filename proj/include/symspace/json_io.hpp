#pragma once

#include <string>
#include <variant>

#include "symspace/analytic.hpp"
#include "symspace/spaces.hpp"
#include "symspace/step_function.hpp"

namespace symspace {

using FunctionInput = std::variant<StepFunction, AnalyticFunction>;

// Inline JSON when the argument starts with '{', otherwise a file path.
std::string read_json_argument(const std::string& arg);

// {"kind":"step","cells":[[measure,value],...]}
// {"kind":"psi","p":2,"alpha":0.5}
// {"kind":"constant","value":1}, {"kind":"indicator","t":0.5,"value":1}
FunctionInput parse_function(const std::string& text);

// {"space":"lz","p":2,"q":4,"alpha":-0.25[,"closure":true]}, "lz0", "lp", "lpq",
// {"space":"lambda","weight":{"kind":"weight","variant":"remark","alpha":0.5,"C":20.09}}
// with weight variants power(gamma), powerlog(p, alpha), remark(alpha, C).
SpaceSpec parse_space(const std::string& text);
Weight parse_weight(const std::string& text);

// "inf", "+inf", "infinity" or a decimal number.
double parse_extended(const std::string& text);

std::string function_to_json(const StepFunction& f);

}  // namespace symspace
