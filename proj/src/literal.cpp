#include "grossgame/literal.hpp"

#include <ostream>

#include "grossgame/errors.hpp"

namespace grossgame {
namespace {

constexpr std::string_view kGrossoneGlyph = "\xE2\x91\xA0";  // U+2460

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GrossScalar parse() {
    skip_blanks();
    if (at_end()) fail("empty expression");
    GrossScalar value = sum();
    skip_blanks();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_blanks() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_blanks();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept_grossone() {
    skip_blanks();
    if (peek() == 'g') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, kGrossoneGlyph.size()) == kGrossoneGlyph) {
      pos_ += kGrossoneGlyph.size();
      return true;
    }
    return false;
  }

  GrossScalar sum() {
    GrossScalar value = product();
    for (;;) {
      if (accept('+')) {
        value += product();
      } else if (accept('-')) {
        value -= product();
      } else {
        return value;
      }
    }
  }

  GrossScalar product() {
    GrossScalar value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        GrossScalar divisor = unary();
        if (divisor.is_zero()) throw ParseError(at, "division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  GrossScalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  GrossScalar atom() {
    skip_blanks();
    if (accept('(')) {
      GrossScalar inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    Rational coeff = 1;
    bool has_number = false;
    if (is_digit(peek()) || peek() == '.') {
      coeff = number();
      has_number = true;
    }
    if (accept_grossone()) {
      return GrossScalar::monomial(coeff, exponent());
    }
    if (!has_number) fail("expected a number, 'g' or '('");
    return GrossScalar(coeff);
  }

  Rational exponent() {
    if (!accept('^')) return 1;
    skip_blanks();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    skip_blanks();
    if (peek() == 'g' || text_.substr(pos_, kGrossoneGlyph.size()) == kGrossoneGlyph) {
      fail("grossone-valued gross-powers are not supported");
    }
    if (!(is_digit(peek()) || peek() == '.')) fail("expected a finite gross-power");
    Rational p = number();
    return negative ? Rational(-p) : p;
  }

  // decimal (optionally with exponent), or decimal '/' digits written without
  // blanks.
  Rational number() {
    const std::size_t start = pos_;
    auto scan_decimal = [&] {
      while (is_digit(peek())) ++pos_;
      if (peek() == '.') {
        ++pos_;
        while (is_digit(peek())) ++pos_;
      }
      // Optional exponent: e or E, an optional sign, then digits.
      if (peek() == 'e' || peek() == 'E') {
        std::size_t ahead = pos_ + 1;
        if (ahead < text_.size() && (text_[ahead] == '+' || text_[ahead] == '-')) ++ahead;
        if (ahead < text_.size() && is_digit(text_[ahead])) {
          pos_ = ahead;
          while (is_digit(peek())) ++pos_;
        }
      }
    };
    scan_decimal();
    if (peek() == '/' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
      ++pos_;
      scan_decimal();
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "malformed number");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GrossScalar parse_gross(std::string_view text) { return Parser(text).parse(); }

std::string format_polynomial(const GrossPolynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : poly.terms()) {
    Rational c = term.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? "-" : "+";
      if (c < 0) c = -c;
    }
    first = false;
    if (term.power == 0) {
      out += format_rational(c);
      continue;
    }
    if (c != 1) out += format_rational(c);
    out += "g";
    if (term.power != 1) out += "^" + format_rational(term.power);
  }
  return out;
}

std::string format_gross(const GrossScalar& value) {
  if (value.is_polynomial()) return format_polynomial(value.numerator());
  return "(" + format_polynomial(value.numerator()) + ")/(" +
         format_polynomial(value.denominator()) + ")";
}

std::ostream& operator<<(std::ostream& os, const GrossScalar& a) {
  return os << format_gross(a);
}

}  // namespace grossgame
