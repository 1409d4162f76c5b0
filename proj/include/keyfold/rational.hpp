#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace keyfold {

using Int = boost::multiprecision::cpp_int;

/// Exact rational carrier for every probability in the library.
/// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(Int(num), Int(den));
}

/// Parses "num/den" or a bare integer "num". Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_fraction(std::string_view text);

/// Renders as "num/den", denominator always present ("1/1", "-2/3", ...).
std::string format_fraction(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace keyfold
