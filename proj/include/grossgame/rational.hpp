#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace grossgame {

using Integer = mpz_class;

// Exact arbitrary-precision rational; every gross-digit and gross-power is one.
// Unlike the bare GMP type, construction from a numerator and a denominator
// always yields the canonical (reduced, positive-denominator) fraction, so
// equality is plain value equality.
class Rational : public mpq_class {
 public:
  using mpq_class::mpq_class;
  Rational() = default;
  Rational(const mpq_class& value) : mpq_class(value) {}  // NOLINT: implicit by design
  Rational(mpq_class&& value) : mpq_class(std::move(value)) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) : mpq_class(num, den) { canonicalize(); }
  template <std::integral N, std::integral D>
  Rational(N num, D den) : Rational(to_integer(num), to_integer(den)) {}

 private:
  template <std::integral I>
  static Integer to_integer(I value) {
    if constexpr (std::is_signed_v<I>) return Integer(static_cast<long>(value));
    else return Integer(static_cast<unsigned long>(value));
  }
};

// Parses "12", "-3.25", "1e-5", "17/2". Throws ParseError on malformed text.
Rational parse_rational(std::string_view text);

// Exact value of the shortest decimal string that round-trips to `value`.
// Throws Error for NaN or infinities.
Rational rational_from_double(double value);

// Integers print as "12", terminating fractions as decimals ("8.5"),
// everything else as "p/q".
std::string format_rational(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace grossgame
