#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pellcf/poly.hpp"

namespace pellcf {

struct ParseError : std::runtime_error {
  size_t position;  // byte offset into the input
  ParseError(const std::string& what, size_t pos);
};

// Arithmetic expression in the single variable t: integer and rational
// literals, + - * / ^, parentheses, whitespace ignored. '/' is only legal
// with a constant divisor; '^' takes a nonnegative integer. The result is
// the expanded canonical polynomial, computed exactly.
Poly parse_poly(std::string_view text);

}  // namespace pellcf
