#include "keyfold/rational.hpp"

#include <cctype>

namespace keyfold {

namespace {

Int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer in fraction");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) throw std::invalid_argument("sign without digits in fraction");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("non-digit character in fraction: '" + std::string(s) + "'");
  }
  return Int(std::string(s));
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in fraction: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_fraction(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace keyfold
