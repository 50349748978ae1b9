#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "grossgame/gross.hpp"
#include "grossgame/linalg.hpp"

namespace grossgame {

// Indices follow the payoff vector Q = [R, S, T, P], which lines up with the
// outcome order CC, CD, DC, DD seen from the first player.
enum class Payoff : std::size_t { R = 0, S = 1, T = 2, P = 3 };

inline std::size_t index(Payoff p) { return static_cast<std::size_t>(p); }
char symbol(Payoff p);

// Each payoff is either a concrete gross-scalar or a free symbol (nullopt).
class Payoffs {
 public:
  Payoffs() = default;
  Payoffs(GrossScalar T, GrossScalar R, GrossScalar P, GrossScalar S);
  static Payoffs symbolic() { return {}; }

  const std::optional<GrossScalar>& operator[](Payoff p) const {
    return values_[index(p)];
  }
  std::optional<GrossScalar>& operator[](Payoff p) { return values_[index(p)]; }

  bool concrete() const;
  // T > R > P > S on the concrete values; false while any payoff is free.
  bool satisfies_fundamental_law() const;

 private:
  std::array<std::optional<GrossScalar>, 4> values_;
};

// constant + cR*R + cS*S + cT*T + cP*P with gross-scalar coefficients.
class PayoffForm {
 public:
  PayoffForm() = default;
  explicit PayoffForm(const Vec4<GrossScalar>& q_coefficients,
                      GrossScalar constant = 0)
      : coeff_(q_coefficients), constant_(std::move(constant)) {}
  static PayoffForm of(Payoff p, GrossScalar coefficient = 1);
  // Coefficient vector of a visit/probability vector dotted with Q.
  static PayoffForm from_weights(const Vec4<Rational>& weights);

  const GrossScalar& coefficient(Payoff p) const { return coeff_[index(p)]; }
  const Vec4<GrossScalar>& coefficients() const { return coeff_; }
  const GrossScalar& constant() const { return constant_; }

  bool is_constant() const;
  // Replaces every concrete payoff by its value.
  PayoffForm substitute(const Payoffs& payoffs) const;
  // Value when every payoff with a nonzero coefficient is concrete.
  std::optional<GrossScalar> evaluate(const Payoffs& payoffs) const;

  PayoffForm& operator+=(const PayoffForm& b);
  PayoffForm& operator-=(const PayoffForm& b);
  PayoffForm& operator*=(const GrossScalar& k);
  friend PayoffForm operator+(PayoffForm a, const PayoffForm& b) { return a += b; }
  friend PayoffForm operator-(PayoffForm a, const PayoffForm& b) { return a -= b; }
  friend PayoffForm operator*(PayoffForm a, const GrossScalar& k) { return a *= k; }
  friend PayoffForm operator*(const GrossScalar& k, PayoffForm a) { return a *= k; }

  bool operator==(const PayoffForm&) const = default;

 private:
  Vec4<GrossScalar> coeff_{};
  GrossScalar constant_{};
};

// Text like "2T+(n-1)P" when printed through an affine pair; plain forms
// print in T, R, P, S order: "T-P", "(g+1)R+3".
std::string format_form(const PayoffForm& form);

// intercept + n * slope, printed per payoff as e.g. "T+(n-1)P".
std::string format_affine(const PayoffForm& intercept, const PayoffForm& slope,
                          const std::string& variable = "n");

struct RankGroup {
  std::size_t place;                 // 1-based
  std::vector<std::size_t> players;  // ex-aequo members, ascending index
  GrossScalar value;
};

// Descending order; equal totals share a place.
std::vector<RankGroup> rank_players(const std::vector<GrossScalar>& totals);

}  // namespace grossgame
