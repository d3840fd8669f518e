#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3lat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses an optionally signed decimal integer of any length. Throws Error(RangeError).
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool fits_int64(const Integer& value);

// Throws Error(RangeError) when the value does not fit.
std::int64_t to_int64(const Integer& value);

// Floor of the square root; the argument must be non-negative.
Integer isqrt(const Integer& value);

// Division rounding toward negative infinity; b must be non-zero.
Integer floor_div(const Integer& a, const Integer& b);

Integer floor_of(const Rational& value);
bool is_integral(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);

}  // namespace k3lat
