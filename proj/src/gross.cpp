#include "grossgame/gross.hpp"

#include <algorithm>

#include "grossgame/errors.hpp"

namespace grossgame {

GrossPolynomial GrossPolynomial::normalize(std::vector<GrossTerm> raw) {
  std::sort(raw.begin(), raw.end(), [](const GrossTerm& a, const GrossTerm& b) {
    return a.power > b.power;
  });
  std::vector<GrossTerm> merged;
  merged.reserve(raw.size());
  for (auto& term : raw) {
    if (!merged.empty() && merged.back().power == term.power) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const GrossTerm& t) { return t.coeff == 0; });
  return GrossPolynomial(std::move(merged));
}

GrossPolynomial GrossPolynomial::constant(const Rational& c) {
  return monomial(c, 0);
}

GrossPolynomial GrossPolynomial::monomial(const Rational& c,
                                          const Rational& power) {
  if (c == 0) return {};
  return GrossPolynomial({GrossTerm{c, power}});
}

bool GrossPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].power == 0 && terms_[0].coeff == 1;
}

int GrossPolynomial::sign() const {
  return terms_.empty() ? 0 : sgn(terms_.front().coeff);
}

Rational GrossPolynomial::coefficient(const Rational& power) const {
  for (const auto& t : terms_) {
    if (t.power == power) return t.coeff;
    if (t.power < power) break;
  }
  return 0;
}

GrossPolynomial GrossPolynomial::operator-() const {
  auto terms = terms_;
  for (auto& t : terms) t.coeff = -t.coeff;
  return GrossPolynomial(std::move(terms));
}

GrossPolynomial GrossPolynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  auto terms = terms_;
  for (auto& t : terms) t.coeff *= factor;
  return GrossPolynomial(std::move(terms));
}

GrossPolynomial GrossPolynomial::shifted(const Rational& delta) const {
  auto terms = terms_;
  for (auto& t : terms) t.power += delta;
  return GrossPolynomial(std::move(terms));
}

GrossPolynomial operator+(const GrossPolynomial& a, const GrossPolynomial& b) {
  // Merge of two descending sequences.
  std::vector<GrossTerm> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->power > j->power)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->power > i->power) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.push_back(GrossTerm{c, i->power});
      ++i;
      ++j;
    }
  }
  return GrossPolynomial(std::move(out));
}

GrossPolynomial operator-(const GrossPolynomial& a, const GrossPolynomial& b) {
  return a + (-b);
}

GrossPolynomial operator*(const GrossPolynomial& a, const GrossPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GrossTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      raw.push_back(GrossTerm{x.coeff * y.coeff, x.power + y.power});
    }
  }
  return GrossPolynomial::normalize(std::move(raw));
}

std::optional<GrossPolynomial> GrossPolynomial::divide_exact(
    const GrossPolynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return GrossPolynomial{};
  if (divisor.is_monomial()) {
    const auto& d = divisor.leading();
    auto terms = terms_;
    for (auto& t : terms) {
      t.coeff /= d.coeff;
      t.power -= d.power;
    }
    return GrossPolynomial(std::move(terms));
  }
  // An exact quotient's trailing term is trailing(*this) / trailing(divisor),
  // so any quotient term below that power proves inexactness. Powers of the
  // remainder decrease through a discrete set, which bounds the loop.
  const Rational floor = trailing().power - divisor.trailing().power;
  std::vector<GrossTerm> quotient;
  GrossPolynomial rest = *this;
  while (!rest.is_zero()) {
    GrossTerm step{rest.leading().coeff / divisor.leading().coeff,
                   rest.leading().power - divisor.leading().power};
    if (step.power < floor) return std::nullopt;
    rest = rest - divisor * GrossPolynomial({step});
    quotient.push_back(std::move(step));
  }
  return GrossPolynomial(std::move(quotient));
}

const char* to_string(Magnitude m) {
  switch (m) {
    case Magnitude::Zero:
      return "Zero";
    case Magnitude::Infinitesimal:
      return "Infinitesimal";
    case Magnitude::Finite:
      return "Finite";
    case Magnitude::Infinite:
      return "Infinite";
  }
  return "?";
}

GrossScalar::GrossScalar(long value)
    : num_(GrossPolynomial::constant(value)),
      den_(GrossPolynomial::constant(1)) {}

GrossScalar::GrossScalar(const Rational& value)
    : num_(GrossPolynomial::constant(value)),
      den_(GrossPolynomial::constant(1)) {}

GrossScalar::GrossScalar(GrossPolynomial poly)
    : num_(std::move(poly)), den_(GrossPolynomial::constant(1)) {}

GrossScalar GrossScalar::monomial(const Rational& coeff,
                                  const Rational& power) {
  return GrossScalar(GrossPolynomial::monomial(coeff, power));
}

GrossScalar GrossScalar::quotient(GrossPolynomial num, GrossPolynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  GrossScalar out;
  if (num.is_zero()) return out;
  if (auto q = num.divide_exact(den)) {
    out.num_ = std::move(*q);
    return out;
  }
  // Lowest power of den becomes g^0 and its leading coefficient becomes 1.
  const Rational shift = -den.trailing().power;
  const Rational scale = 1 / den.leading().coeff;
  out.num_ = num.shifted(shift).scaled(scale);
  out.den_ = den.shifted(shift).scaled(scale);
  return out;
}

Rational GrossScalar::leading_power() const {
  return num_.leading().power - den_.leading().power;
}

Magnitude GrossScalar::classify() const {
  if (is_zero()) return Magnitude::Zero;
  const int s = sgn(leading_power());
  if (s > 0) return Magnitude::Infinite;
  if (s < 0) return Magnitude::Infinitesimal;
  return Magnitude::Finite;
}

Rational GrossScalar::finite_part() const {
  if (!is_polynomial()) throw NotPolynomial();
  return num_.coefficient(0);
}

std::optional<Rational> GrossScalar::as_rational() const {
  if (is_zero()) return Rational(0);
  if (!is_polynomial() || !num_.is_monomial() || num_.leading().power != 0) {
    return std::nullopt;
  }
  return num_.leading().coeff;
}

GrossScalar GrossScalar::operator-() const {
  GrossScalar out = *this;
  out.num_ = -num_;
  return out;
}

GrossScalar& GrossScalar::operator+=(const GrossScalar& b) {
  if (den_ == b.den_) {
    *this = quotient(num_ + b.num_, den_);
  } else {
    *this = quotient(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
  }
  return *this;
}

GrossScalar& GrossScalar::operator-=(const GrossScalar& b) {
  return *this += -b;
}

GrossScalar& GrossScalar::operator*=(const GrossScalar& b) {
  if (is_polynomial() && b.is_polynomial()) {
    num_ = num_ * b.num_;
    return *this;
  }
  *this = quotient(num_ * b.num_, den_ * b.den_);
  return *this;
}

GrossScalar& GrossScalar::operator/=(const GrossScalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  *this = quotient(num_ * b.den_, den_ * b.num_);
  return *this;
}

bool operator==(const GrossScalar& a, const GrossScalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::strong_ordering operator<=>(const GrossScalar& a, const GrossScalar& b) {
  // Both denominators have a positive leading coefficient.
  const GrossPolynomial diff = a.den_ == b.den_
                                   ? a.num_ - b.num_
                                   : a.num_ * b.den_ - b.num_ * a.den_;
  return diff.sign() <=> 0;
}

GrossScalar abs(const GrossScalar& a) { return a.sign() < 0 ? -a : a; }

}  // namespace grossgame
