#ifndef OACK_RATIONAL_HPP
#define OACK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace oack {

// Exact arbitrary-precision scalars. Every quantity in the library is one of
// these; floating point never enters any computation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with q > 0. Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view s);

// Formats in lowest terms as "p", or "p/q" when the denominator exceeds 1.
std::string to_string(const Rational& r);

Rational pow_rational(const Rational& base, unsigned exponent);

Int factorial(unsigned n);

inline Rational abs_rational(const Rational& r) {
  return r < 0 ? Rational(-r) : r;
}

inline int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

} // namespace oack

#endif
