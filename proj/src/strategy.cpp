#include "grossgame/strategy.hpp"

#include <algorithm>
#include <cctype>

#include "grossgame/errors.hpp"

namespace grossgame {

Strategy::Strategy(Rational y, Rational p1, Rational p2, Rational p3,
                   Rational p4)
    : params_{std::move(y), std::move(p1), std::move(p2), std::move(p3),
              std::move(p4)} {
  for (const auto& p : params_) {
    if (p < 0 || p > 1) {
      throw InvalidStrategy("strategy parameter " + format_rational(p) +
                            " outside [0, 1]");
    }
  }
}

std::optional<Strategy> Strategy::named(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (key == "DU" || key == "ALLD") return always_defect();
  if (key == "TRIGGER" || key == "GRIM") return trigger();
  if (key == "TFT") return tit_for_tat();
  if (key == "STFT") return suspicious_tit_for_tat();
  return std::nullopt;
}

bool Strategy::deterministic() const {
  return std::all_of(params_.begin(), params_.end(),
                     [](const Rational& p) { return p == 0 || p == 1; });
}

std::string format_strategy(const Strategy& s) {
  std::string out = "S(";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) out += ", ";
    out += format_rational(s.params()[i]);
  }
  return out + ")";
}

}  // namespace grossgame
