#pragma once

#include <string>
#include <string_view>

#include "fracleib/operator_spec.hpp"
#include "fracleib/power_sum.hpp"

namespace fracleib {

// Function grammar: real literals, x, x^E (E a literal, parenthesized when
// negative), +, -, *, / by a constant, parentheses. Whitespace-insensitive,
// ASCII only. Products are expanded, so the result is always canonical.
PowerSum parse_function(std::string_view text);

// Operator grammar: D | RL(a) | caputo(a) | GL(a, h=H) | local(a=FN, b=FN),
// combined linearly with real coefficients, e.g. "2*RL(0.5) - D".
// Parentheses group sub-combinations. Order ranges are checked here.
OperatorSpec parse_operator(std::string_view text);

// Inverse of parse_function up to canonical form; parse(format(p)) == p.
std::string format_power_sum(const PowerSum& f);

std::string format_operator(const OperatorSpec& spec);

// printf "%.17g": shortest form that always round-trips through parsing.
std::string format_real(double v);

}  // namespace fracleib
