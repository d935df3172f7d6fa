#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyomino {

using BigInt = mpz_class;
// Always kept canonical: gcd(|num|, den) = 1 and den >= 1.
using Rational = mpq_class;

std::string to_string(const BigInt& value);

// "num/den"; integers still print with "/1".
std::string fraction_string(const Rational& value);

// Parses a nonnegative or negative decimal such as "0.24307", "4", "-1.5".
// Throws Error("malformed") on anything else.
Rational parse_decimal(std::string_view text);

// Exact rounding of value to `places` decimal places, printed with exactly
// that many digits after the point.
std::string decimal_floor(const Rational& value, int places);
std::string decimal_ceil(const Rational& value, int places);

}  // namespace polyomino
