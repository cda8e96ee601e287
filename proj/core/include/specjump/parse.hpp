#pragma once

#include <string_view>

#include "specjump/poly2.hpp"

namespace specjump {

/// Parses polynomial text such as "x^2 + y^3" or "(1/2)*x*y^4 - y^7".
///
/// Grammar: integers, the two variable names, + - * / ^ and parentheses;
/// whitespace is ignored. Division is only allowed by nonzero constants and
/// exponents must be nonnegative integer literals. Errors are Error(Parse)
/// with the byte offset in the message.
Poly2 parse_poly(std::string_view text, const VariableNames& names = kXY);

}  // namespace specjump
