#include "gapkit/rational.hpp"

#include <stdexcept>

namespace gapkit {

namespace {

// BigInt's string constructor treats a leading 0 as an octal prefix; strip
// redundant leading zeros so "025" parses as decimal 25.
BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    start = 1;
  }
  while (start + 1 < text.size() && text[start] == '0') ++start;
  BigInt value(text.substr(start));
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_decimal(text.substr(0, slash));
    BigInt den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
      throw std::invalid_argument("malformed rational: " + text);
    BigInt num = parse_decimal(digits);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(parse_decimal(text));
}

std::string rational_to_string(const Rational& x) {
  std::string num = numerator(x).str();
  if (denominator(x) == 1) return num;
  return num + "/" + denominator(x).str();
}

}  // namespace gapkit
