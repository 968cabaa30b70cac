#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rellich {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "3", "-0.25", "1.5e-2" or "7/3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double (every double is a dyadic rational).
Rational to_rational(double value);

double to_double(const Rational& value);

std::string to_string(const Rational& value);

}  // namespace rellich
