#pragma once

// Payoff design for the model
//
//   0 < Delta(target, rival, n) < tau
//
// Writing T = S + dT, R = S + dR, P = S + dP (all shifts positive encodes
// T > R > P > S) turns the gap line into
//
//   Delta~ = (g1 n + g2) S + g3 n + g4,     g1 = sum mu, g2 = sum lambda,
//
// with lambda = F - threshold G and mu = G. When g1 != 0 the model pins S to
// an interval of width tau / |g1 n + g2|; when g1 == 0 a shift with a nonzero
// slope component (dT first) is pinned instead, with width
// tau / |mu_p n + lambda_p|. For n = grossone both widths are infinitesimal.

#include <array>
#include <optional>
#include <vector>

#include "grossgame/interval.hpp"
#include "grossgame/payoffs.hpp"
#include "grossgame/stoch_engine.hpp"

namespace grossgame::solver {

// Known shifts and S; a missing entry is free.
struct ShiftParams {
  std::optional<GrossScalar> delta_T;
  std::optional<GrossScalar> delta_R;
  std::optional<GrossScalar> delta_P;
  std::optional<GrossScalar> S;

  // Shift of T, R or P (S has none).
  const std::optional<GrossScalar>& shift(Payoff p) const;
  std::optional<GrossScalar>& shift(Payoff p);
};

struct GammaCoeffs {
  Rational gamma1;
  Rational gamma2;
  Vec4<Rational> lambda;  // Q order: R, S, T, P
  Vec4<Rational> mu;
  // Present when the shifts they depend on are known (or irrelevant).
  std::optional<GrossScalar> gamma3;
  std::optional<GrossScalar> gamma4;
  std::optional<GrossScalar> gamma5;
  std::optional<GrossScalar> gamma6;
};

// Throws DegenerateBeta when mu == 0.
GammaCoeffs gammas(const stoch::DeltaLine& line, const ShiftParams& shifts = {});
GammaCoeffs gammas(const Vec4<Rational>& lambda, const Vec4<Rational>& mu,
                   const ShiftParams& shifts = {});

enum class SolutionCase { Gamma1NonZero, Gamma1Zero };

const char* to_string(SolutionCase c);

struct SolutionSet {
  SolutionCase kind;
  Payoff pivot;  // S when gamma1 != 0
  // Values of the pivoted quantity: S itself, or the pivot's shift.
  OpenInterval shift_interval;
  // Values of the pivot payoff (S, or S + shift).
  OpenInterval pivot_interval;
  GrossScalar width;
  Magnitude width_class;
  // Fixed S (gamma1 == 0 case only).
  std::optional<GrossScalar> S;
  // Shifts of the non-pivot payoffs; nullopt means "chosen at will" subject
  // only to T > R > P > S.
  ShiftParams shifts;
  // Whether some pivot value in the interval satisfies T > R > P > S.
  bool law_compatible = false;
  // Part of shift_interval compatible with the fixed shifts' ordering.
  std::optional<OpenInterval> admissible;

  // Interval of payoff p, when p moves with the pivot.
  std::optional<OpenInterval> range(Payoff p) const;
  // Payoff tuple with the pivot at lower + fraction * width. Free payoffs are
  // spread evenly inside the gaps the ordering leaves them.
  Payoffs sample(const Rational& fraction) const;
};

// Requires delta_T, delta_R and delta_P. Throws EmptySolution when
// g1 n + g2 vanishes.
SolutionSet solve_gamma1_nonzero(const GammaCoeffs& g, const ShiftParams& shifts,
                                 const GrossScalar& tau, const GrossScalar& n);

// Requires S and every non-pivot shift whose coefficients are nonzero.
// Throws NoPivot when mu_R = mu_T = mu_P = 0, EmptySolution when the pivot
// coefficient vanishes at n.
SolutionSet solve_gamma1_zero(const GammaCoeffs& g, const ShiftParams& shifts,
                              const GrossScalar& tau, const GrossScalar& n);

struct ModelSpec {
  ModelSpec() = default;
  ModelSpec(GrossScalar tau_, GrossScalar n_, std::size_t target_ = 0,
            std::optional<std::size_t> rival_ = std::nullopt)
      : tau(std::move(tau_)), n(std::move(n_)), target(target_), rival(rival_) {}

  GrossScalar tau;
  GrossScalar n;
  std::size_t target = 0;
  std::optional<std::size_t> rival;
  // Used only to pick the strongest rival among three or more players.
  Payoffs reference{5, 3, 1, 0};
};

struct ValidationReport {
  GrossScalar delta;
  bool T_above_R = false;
  bool R_above_P = false;
  bool P_above_S = false;
  bool positive = false;   // Delta > 0
  bool below_tau = false;  // Delta < tau

  bool fundamental_law() const { return T_above_R && R_above_P && P_above_S; }
  bool passed() const { return fundamental_law() && positive && below_tau; }
};

// Evaluates the line at spec.n (exact when the line came from exact_line).
ValidationReport validate_solution(const Payoffs& sample,
                                   const stoch::DeltaLine& line,
                                   const ModelSpec& spec);

struct RivalChoice {
  std::size_t index;
  bool tie = false;
};

// Strongest opponent of the target at spec.n under spec.reference payoffs;
// ties go to the lowest index.
RivalChoice select_rival(const std::vector<Strategy>& players,
                         const ModelSpec& spec,
                         const StationarityOptions& options = {});

struct ModelSolution {
  RivalChoice rival;
  stoch::DeltaLine line;  // exact line for finite n
  bool exact = false;
  GammaCoeffs gammas;
  SolutionSet set;
};

ModelSolution solve_model(const std::vector<Strategy>& players,
                          const ModelSpec& spec, const ShiftParams& shifts,
                          const StationarityOptions& options = {});

}  // namespace grossgame::solver
