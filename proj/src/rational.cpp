#include "cam/rational.hpp"

namespace cam {

std::string to_fraction(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_decimal(const Rational& value, int digits) {
  const bool negative = value.numerator() < 0;
  // boost::rational keeps the denominator positive.
  const std::uint64_t den = static_cast<std::uint64_t>(value.denominator());
  std::uint64_t num = negative ? 0 - static_cast<std::uint64_t>(value.numerator())
                               : static_cast<std::uint64_t>(value.numerator());

  std::uint64_t whole = num / den;
  std::uint64_t rem = num % den;
  std::string frac;
  for (int i = 0; i < digits; ++i) {
    // Long division by repeated addition; every partial sum stays below
    // 2 * den, which fits in 64 bits.
    std::uint64_t digit = 0;
    std::uint64_t next = 0;
    for (int k = 0; k < 10; ++k) {
      next += rem;
      if (next >= den) {
        next -= den;
        ++digit;
      }
    }
    rem = next;
    frac += static_cast<char>('0' + digit);
  }
  // Round half away from zero: rem / den >= 1/2.
  if (rem >= den - rem) {
    int i = digits - 1;
    for (; i >= 0; --i) {
      if (frac[static_cast<std::size_t>(i)] == '9') {
        frac[static_cast<std::size_t>(i)] = '0';
      } else {
        ++frac[static_cast<std::size_t>(i)];
        break;
      }
    }
    if (i < 0) ++whole;
  }

  const bool is_zero = whole == 0 && frac.find_first_not_of('0') == std::string::npos;
  std::string out = (negative && !is_zero) ? "-" : "";
  out += std::to_string(whole);
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace cam
