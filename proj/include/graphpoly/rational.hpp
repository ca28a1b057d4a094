#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace graphpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "n" or "n/d" with an optional leading sign. Throws ParseError on
// anything else (including a zero denominator).
Rational rat_parse(const std::string& text);

// Canonical form: "n" when the denominator is 1, otherwise "n/d" with d > 0.
std::string rat_str(const Rational& r);

// Exact integer power; e may be negative provided base != 0.
Rational rat_pow(const Rational& base, long long e);

double rat_double(const Rational& r);

// Falling factorial x(x-1)...(x-k+1) as an exact rational.
Rational falling_factorial(const Rational& x, int k);

} // namespace graphpoly
