#pragma once

// Text form of gross-scalars.
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | atom
//   atom    := number ['g' ['^' exponent]] | 'g' ['^' exponent] | '(' sum ')'
//   number  := decimal | decimal '/' digits      (no blanks inside p/q)
//   exponent:= ['+' | '-'] number
//
// `g` (or the glyph ①) is grossone. A number immediately written as p/q is a
// single rational coefficient, so "17/2g^-1" reads as 8.5 g^-1 while "g/2"
// is g divided by 2. Quotients format as "(num)/(den)".

#include <string>
#include <string_view>

#include "grossgame/gross.hpp"

namespace grossgame {

// Throws ParseError (with byte position) on malformed input.
GrossScalar parse_gross(std::string_view text);

std::string format_gross(const GrossScalar& value);
std::string format_polynomial(const GrossPolynomial& poly);

}  // namespace grossgame
