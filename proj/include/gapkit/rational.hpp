#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gapkit {

// Exact rational arithmetic for every threshold / gap inequality in the
// toolkit. Floating point is confined to the spectral module.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& x, unsigned p) {
  Rational acc(1);
  Rational base = x;
  while (p > 0) {
    if (p & 1u) acc *= base;
    base *= base;
    p >>= 1u;
  }
  return acc;
}

// Accepts "3", "-3", "3/4" and plain decimals like "0.25".
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& x);

}  // namespace gapkit
