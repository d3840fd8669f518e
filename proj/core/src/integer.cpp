#include "k3lat/integer.hpp"

#include <limits>

#include "k3lat/errors.hpp"

namespace k3lat {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) raise(ErrorKind::RangeError, "empty integer literal");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') raise(ErrorKind::RangeError, "invalid digit in integer literal '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool fits_int64(const Integer& value) {
  return value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Integer& value) {
  if (!fits_int64(value)) raise(ErrorKind::RangeError, "integer " + value.str() + " exceeds 64-bit search range");
  return static_cast<std::int64_t>(value);
}

Integer isqrt(const Integer& value) {
  if (value < 0) raise(ErrorKind::RangeError, "isqrt of negative value");
  return boost::multiprecision::sqrt(value);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) raise(ErrorKind::RangeError, "division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer floor_of(const Rational& value) {
  return floor_div(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value));
}

bool is_integral(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace k3lat
