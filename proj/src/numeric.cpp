#include "polyomino/numeric.hpp"

#include <cctype>

#include "polyomino/error.hpp"

namespace polyomino {

namespace {

BigInt pow10(int places) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return result;
}

std::string format_scaled(const BigInt& scaled, int places) {
  std::string sign = scaled < 0 ? "-" : "";
  BigInt magnitude = abs(scaled);
  std::string digits = magnitude.get_str();
  if (places == 0) return sign + digits;
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  return sign + digits;
}

}  // namespace

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string digits;
  int places = 0;
  bool seen_point = false;
  for (char ch : body) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++places;
    } else {
      throw Error("malformed", "not a decimal number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) {
    throw Error("malformed", "not a decimal number: '" + std::string(text) + "'");
  }
  Rational value(BigInt(digits, 10), pow10(places));
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string decimal_floor(const Rational& value, int places) {
  BigInt scaled;
  BigInt numerator = value.get_num() * pow10(places);
  mpz_fdiv_q(scaled.get_mpz_t(), numerator.get_mpz_t(), value.get_den().get_mpz_t());
  return format_scaled(scaled, places);
}

std::string decimal_ceil(const Rational& value, int places) {
  BigInt scaled;
  BigInt numerator = value.get_num() * pow10(places);
  mpz_cdiv_q(scaled.get_mpz_t(), numerator.get_mpz_t(), value.get_den().get_mpz_t());
  return format_scaled(scaled, places);
}

}  // namespace polyomino
