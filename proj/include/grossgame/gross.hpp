#pragma once

// Exact arithmetic over grossone-based numerals.
//
// A GrossPolynomial is a finite sum  c_1 g^{p_1} + ... + c_k g^{p_k}  with
// exact rational gross-digits c_i != 0 and strictly descending exact rational
// gross-powers p_i.  A GrossScalar is a quotient of two such polynomials; the
// quotient form keeps values like 20/(0.04g + 3) exact instead of truncating a
// series.  Scalars are ordered by the sign of the leading term of the
// cross-multiplied difference, i.e. by their eventual behaviour in g.
//
// Grossone-valued gross-powers (g^{4.56g}) are not representable.

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

#include "grossgame/rational.hpp"

namespace grossgame {

struct GrossTerm {
  Rational coeff;  // gross-digit
  Rational power;  // gross-power

  bool operator==(const GrossTerm&) const = default;
};

class GrossPolynomial {
 public:
  GrossPolynomial() = default;

  // Merges equal powers, drops zero coefficients, sorts by descending power.
  static GrossPolynomial normalize(std::vector<GrossTerm> raw);
  static GrossPolynomial constant(const Rational& c);
  static GrossPolynomial monomial(const Rational& c, const Rational& power);

  const std::vector<GrossTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  int sign() const;

  // Preconditions: !is_zero().
  const GrossTerm& leading() const { return terms_.front(); }
  const GrossTerm& trailing() const { return terms_.back(); }

  // Coefficient of g^power, zero when absent.
  Rational coefficient(const Rational& power) const;

  GrossPolynomial operator-() const;
  GrossPolynomial scaled(const Rational& factor) const;
  // Multiplies by g^delta.
  GrossPolynomial shifted(const Rational& delta) const;

  friend GrossPolynomial operator+(const GrossPolynomial& a,
                                   const GrossPolynomial& b);
  friend GrossPolynomial operator-(const GrossPolynomial& a,
                                   const GrossPolynomial& b);
  friend GrossPolynomial operator*(const GrossPolynomial& a,
                                   const GrossPolynomial& b);

  // Quotient q with q * divisor == *this, when one exists.
  std::optional<GrossPolynomial> divide_exact(
      const GrossPolynomial& divisor) const;

  bool operator==(const GrossPolynomial&) const = default;

 private:
  explicit GrossPolynomial(std::vector<GrossTerm> terms)
      : terms_(std::move(terms)) {}

  std::vector<GrossTerm> terms_;
};

enum class Magnitude { Zero, Infinitesimal, Finite, Infinite };

const char* to_string(Magnitude m);

class GrossScalar {
 public:
  GrossScalar() : den_(GrossPolynomial::constant(1)) {}
  GrossScalar(long value);  // NOLINT: implicit, numbers mix freely
  GrossScalar(const Rational& value);  // NOLINT
  GrossScalar(GrossPolynomial poly);   // NOLINT

  // num / den in normalized form. Throws DivisionByZero when den is zero.
  static GrossScalar quotient(GrossPolynomial num, GrossPolynomial den);
  static GrossScalar grossone() { return monomial(1, 1); }
  static GrossScalar monomial(const Rational& coeff, const Rational& power);

  const GrossPolynomial& numerator() const { return num_; }
  const GrossPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  // Leading power of num minus leading power of den. Precondition: nonzero.
  Rational leading_power() const;
  Magnitude classify() const;
  // Coefficient of g^0. Throws NotPolynomial for a proper quotient.
  Rational finite_part() const;
  // The value as a plain rational when it is finite and has no other terms.
  std::optional<Rational> as_rational() const;

  GrossScalar operator-() const;
  GrossScalar& operator+=(const GrossScalar& b);
  GrossScalar& operator-=(const GrossScalar& b);
  GrossScalar& operator*=(const GrossScalar& b);
  GrossScalar& operator/=(const GrossScalar& b);

  friend GrossScalar operator+(GrossScalar a, const GrossScalar& b) {
    return a += b;
  }
  friend GrossScalar operator-(GrossScalar a, const GrossScalar& b) {
    return a -= b;
  }
  friend GrossScalar operator*(GrossScalar a, const GrossScalar& b) {
    return a *= b;
  }
  friend GrossScalar operator/(GrossScalar a, const GrossScalar& b) {
    return a /= b;
  }

  friend bool operator==(const GrossScalar& a, const GrossScalar& b);
  friend std::strong_ordering operator<=>(const GrossScalar& a,
                                          const GrossScalar& b);

 private:
  GrossPolynomial num_;
  GrossPolynomial den_;
};

inline std::strong_ordering cmp(const GrossScalar& a, const GrossScalar& b) {
  return a <=> b;
}

GrossScalar abs(const GrossScalar& a);

std::ostream& operator<<(std::ostream& os, const GrossScalar& a);

}  // namespace grossgame
