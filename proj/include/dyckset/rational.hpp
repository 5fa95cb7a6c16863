#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyckset/errors.hpp"

namespace dyckset {

// Exact arbitrary-precision arithmetic. Rational values are always kept in
// lowest terms with a positive denominator (cpp_rational maintains this),
// so equality and ordering are decidable and exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with optional leading '-' on p and q >= 1.
// Throws ParseError (with offset) on anything else, including "p/0".
Rational parse_rational(std::string_view text);

// Renders in lowest terms: "p" when q == 1, else "p/q".
std::string rational_to_string(const Rational& value);

// Largest integer <= value.
Int floor_rational(const Rational& value);

}  // namespace dyckset
