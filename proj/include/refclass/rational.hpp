#pragma once

// Exact rationals for interval endpoints.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace refclass {

using Rational = boost::multiprecision::cpp_rational;

// Parses "0", "1", "0.25", ".5" or "3/8". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "1/2", "0", "1". Inverse of parse_rational.
std::string to_string(const Rational& value);

// Finite decimal expansion when one exists ("0.125"), otherwise "n/d".
std::string to_decimal_or_fraction(const Rational& value);

double to_double(const Rational& value);

}  // namespace refclass
