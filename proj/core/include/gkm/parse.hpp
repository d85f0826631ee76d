#pragma once

#include "gkm/polynomial.hpp"

#include <span>
#include <string>
#include <string_view>

namespace gkm {

// Parses polynomial expression text over the given variable names.
//
// Grammar: integer and p/q literals, declared variable names, binary + - *,
// ^ with a nonnegative integer literal exponent, parentheses, and a single
// optional leading sign per (sub)expression.  Whitespace is insignificant.
// Errors carry 1-based line and column positions.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars);

bool is_identifier(std::string_view s);

} // namespace gkm
