#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace longrun {

// Exact scalar field. cpp_rational keeps gcd-reduced canonical form with a
// positive denominator, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q", plain integers, and fixed-point decimals with at most 12
// fractional digits ("-2", "3/4", "0.125"). Exponents are rejected.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

// Recovers the exact rational for a double that originated as a decimal
// literal with at most 12 fractional digits. Values beyond |x| ~ 1e6 are
// outside the supported literal range and are rejected.
Rational rational_from_decimal(double value);

// ceil(a/b) for exact rationals, b > 0.
std::int64_t ceil_div(const Rational& numerator, const Rational& denominator);

}  // namespace longrun
