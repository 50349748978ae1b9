#pragma once

// Deterministic memory-one tournaments. Two deterministic players revisit an
// outcome after at most five rounds, so every pairing is a short transient
// followed by a cycle, and the expectation after n rounds has a closed form
// in n that holds for finite n and for grossone-based n alike.

#include <cstdint>
#include <optional>
#include <vector>

#include "grossgame/gross.hpp"
#include "grossgame/interval.hpp"
#include "grossgame/payoffs.hpp"
#include "grossgame/strategy.hpp"

namespace grossgame::det {

// Outcome of one round seen from the first player (own move first).
enum class Outcome : std::uint8_t { CC = 0, CD = 1, DC = 2, DD = 3 };

Outcome mirror(Outcome o);
const char* to_string(Outcome o);
// Payoff earned by the first player.
Payoff payoff_of(Outcome o);

struct PairTrace {
  std::vector<Outcome> transient;
  std::vector<Outcome> cycle;  // nonempty, pairwise distinct
};

// Throws NonDeterministicStrategy unless both strategies are deterministic.
PairTrace play_pair(const Strategy& first, const Strategy& second);

// E(n) = intercept + n * slope.
struct AffineForm {
  PayoffForm intercept;
  PayoffForm slope;

  PayoffForm at(const GrossScalar& n) const { return intercept + slope * n; }
  bool operator==(const AffineForm&) const = default;
};

AffineForm operator+(const AffineForm& a, const AffineForm& b);
AffineForm operator-(const AffineForm& a, const AffineForm& b);

// Decomposition n = transient + completed * cycle_length + remainder for a
// natural gross-number n past the transient. Positive powers of grossone are
// divisible by every finite cycle length (g/L is natural), so the remainder
// only depends on the finite part of n.
struct RoundSplit {
  GrossScalar completed_cycles;
  std::size_t remainder;
};

// Throws InvalidRoundCount unless n is a polynomial with nonnegative integer
// powers, an integer finite part, and n >= transient_length.
RoundSplit split_rounds(const GrossScalar& n, std::size_t transient_length,
                        std::size_t cycle_length);

// Expectation of the first player of a pair.
class AffineExpectation {
 public:
  explicit AffineExpectation(PairTrace trace);

  const PairTrace& trace() const { return trace_; }

  // Closed form valid for every n >= transient length with
  // (n - transient length) mod cycle length == residue.
  AffineForm closed_form(std::size_t residue) const;
  // The closed form holding at n = grossone (and every multiple of the cycle
  // length); used when n is left symbolic.
  AffineForm symbolic_form() const;

  PayoffForm at(std::uint64_t n) const;
  // n >= 1; finite n below the transient length is summed directly.
  PayoffForm at(const GrossScalar& n) const;

 private:
  PayoffForm prefix_sum(std::size_t rounds) const;

  PairTrace trace_;
  PayoffForm transient_sum_;
  PayoffForm cycle_sum_;
};

AffineExpectation pair_expectation(const Strategy& first,
                                   const Strategy& second);

// Round-by-round reference sum, independent of the cycle analysis.
PayoffForm simulate_rounds(const Strategy& first, const Strategy& second,
                           std::uint64_t n);

struct TournamentResult {
  // pair[k][j]: expectation of player k against j (unused on the diagonal).
  std::vector<std::vector<PayoffForm>> pair;
  std::vector<PayoffForm> totals;
  // Present when every total is a concrete number.
  std::optional<std::vector<RankGroup>> ranking;
};

// Throws InvalidStrategy-family errors for fewer than two players.
TournamentResult tournament(const std::vector<Strategy>& players,
                            const Payoffs& payoffs, const GrossScalar& n);

struct SymbolicTable {
  std::vector<std::vector<AffineForm>> pair;
  std::vector<AffineForm> totals;
};

// Expectations with n left free (see AffineExpectation::symbolic_form).
SymbolicTable symbolic_tournament(const std::vector<Strategy>& players);

// R range making the always-defector beat TRIGGER/TFT after n = grossone:
// (P, P + (2T - P - S) g^-1). Throws EmptyInterval if 2T - P - S <= 0.
OpenInterval existence_interval_R(const GrossScalar& T, const GrossScalar& P,
                                  const GrossScalar& S);

}  // namespace grossgame::det
