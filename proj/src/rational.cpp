#include "grossgame/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <system_error>

#include "grossgame/errors.hpp"

namespace grossgame {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Integer pow10(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

// Decimal with optional sign, fraction and exponent.
Rational parse_decimal(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < text.size() && is_digit(text[i])) {
    digits.push_back(text[i++]);
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) {
      digits.push_back(text[i++]);
      ++scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw ParseError(offset + i, "expected a number");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    long exponent = 0;
    bool exp_digit = false;
    while (i < text.size() && is_digit(text[i])) {
      exponent = exponent * 10 + (text[i++] - '0');
      exp_digit = true;
      if (exponent > 100000) throw ParseError(offset + i, "exponent too large");
    }
    if (!exp_digit) throw ParseError(offset + i, "expected exponent digits");
    scale += exp_negative ? exponent : -exponent;
  }
  if (i != text.size()) throw ParseError(offset + i, "unexpected character");

  Rational value{Integer(digits, 10)};
  if (scale > 0) {
    value /= Rational(pow10(static_cast<unsigned long>(scale)));
  } else if (scale < 0) {
    value *= Rational(pow10(static_cast<unsigned long>(-scale)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, 0);
  Rational num = parse_decimal(text.substr(0, slash), 0);
  Rational den = parse_decimal(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError(slash + 1, "zero denominator");
  return num / den;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw Error("non-finite floating-point value");
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw Error("cannot format floating-point value");
  return parse_decimal(std::string_view(buffer, end - buffer), 0);
}

std::string format_rational(const Rational& value) {
  if (is_integer(value)) return value.get_num().get_str();

  // Terminating decimal iff the reduced denominator is 2^a * 5^b.
  Integer den = value.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(),
                                  Integer(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(),
                                   Integer(5).get_mpz_t());
  if (den != 1) return value.get_str();

  unsigned long places = std::max(twos, fives);
  Integer scaled = value.get_num() * pow10(places) / value.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

}  // namespace grossgame
