#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace cam {

// Every CAM value is a ratio of small member counts, so exact arithmetic is
// cheap and keeps equality comparisons meaningful.
using Rational = boost::rational<std::int64_t>;

// Decimal rendering with exactly `digits` fractional digits, rounded half
// away from zero. Used only at the reporting boundary.
std::string to_decimal(const Rational& value, int digits = 6);

// "3/2", or "6" when the denominator is 1.
std::string to_fraction(const Rational& value);

}  // namespace cam
