#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace shoda {

using Int = boost::multiprecision::cpp_int;

// exact rational, canonical reduced form with positive denominator
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// canonical text form "num/den", denominator always present
inline std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s);

}  // namespace shoda
