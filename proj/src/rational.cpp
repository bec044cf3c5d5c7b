#include "oack/rational.hpp"

#include <stdexcept>

namespace oack {

namespace {

Int parse_int(std::string_view s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("empty ") + what);
  // cpp_int accepts a leading '+', which we do not.
  std::size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument(std::string("bad ") + what);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument(std::string("bad ") + what + ": " + std::string(s));
    }
  }
  return Int(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(s, "numerator"));
  }
  Int num = parse_int(s.substr(0, slash), "numerator");
  Int den = parse_int(s.substr(slash + 1), "denominator");
  if (den <= 0) {
    throw std::invalid_argument("denominator must be positive: " + std::string(s));
  }
  return Rational(num) / Rational(den);
}

std::string to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational acc(1);
  Rational b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

Int factorial(unsigned n) {
  Int f(1);
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

} // namespace oack
