#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "grossgame/rational.hpp"

namespace grossgame {

// Memory-one strategy (y, p1, p2, p3, p4): probability of cooperating in the
// first round, then after CC, CD, DC and DD (own move first).
class Strategy {
 public:
  // Throws InvalidStrategy if a parameter lies outside [0, 1].
  Strategy(Rational y, Rational p1, Rational p2, Rational p3, Rational p4);

  static Strategy always_defect() { return {0, 0, 0, 0, 0}; }
  static Strategy trigger() { return {1, 1, 0, 0, 0}; }
  static Strategy tit_for_tat() { return {1, 1, 0, 1, 0}; }
  static Strategy suspicious_tit_for_tat() { return {0, 1, 0, 1, 0}; }

  // "Du", "TRIGGER", "TFT", "STFT" (case-insensitive aliases included).
  static std::optional<Strategy> named(std::string_view name);

  const Rational& initial() const { return params_[0]; }
  // outcome: 0 = CC, 1 = CD, 2 = DC, 3 = DD.
  const Rational& after(std::size_t outcome) const { return params_[1 + outcome]; }
  const std::array<Rational, 5>& params() const { return params_; }

  bool deterministic() const;

  bool operator==(const Strategy&) const = default;

 private:
  std::array<Rational, 5> params_;
};

std::string format_strategy(const Strategy& s);

}  // namespace grossgame
