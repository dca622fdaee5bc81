#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace autgraph {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Expression templates are off so that `auto` always holds a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) return Rational(-BigInt(num), -BigInt(den));
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Renders "p/q" in lowest terms with q > 0. Integers keep the "/1".
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

}  // namespace autgraph
