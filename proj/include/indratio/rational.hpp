#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace indratio {

/// Arbitrary-precision integers and always-reduced rationals.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Reduced fraction "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

}  // namespace indratio
