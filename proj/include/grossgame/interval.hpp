#pragma once

#include "grossgame/errors.hpp"
#include "grossgame/gross.hpp"

namespace grossgame {

// Open interval (lower, upper) with gross-scalar endpoints.
struct OpenInterval {
  GrossScalar lower;
  GrossScalar upper;

  bool empty() const { return !(lower < upper); }
  GrossScalar width() const { return upper - lower; }
  GrossScalar midpoint() const { return (lower + upper) / GrossScalar(2); }
  // lower + fraction * width; fraction 0 and 1 give the (excluded) endpoints.
  GrossScalar at(const Rational& fraction) const {
    return lower + GrossScalar(fraction) * width();
  }
  bool contains(const GrossScalar& x) const { return lower < x && x < upper; }

  OpenInterval shifted(const GrossScalar& delta) const {
    return {lower + delta, upper + delta};
  }

  bool operator==(const OpenInterval&) const = default;
};

}  // namespace grossgame
