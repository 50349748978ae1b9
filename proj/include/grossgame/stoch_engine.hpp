#pragma once

// Stochastic memory-one tournaments as Markov chains over CC, CD, DC, DD.
//
// Expectations after n rounds are sums of A L^{t-1} Q^T. They are computed
// exactly: strategy parameters are rationals, so the chain is advanced over
// integers scaled by a common denominator, which keeps n in the tens of
// thousands cheap. Floating point is only used to locate the stationarity
// threshold.
//
// Past the threshold the gap between two players is the line
//   Delta~(n) = [F + (n - threshold) G] Q^T = alpha + n beta,
// where F sums the per-round gap vectors for rounds 1..threshold and G is the
// per-round gap once the chains are stationary.

#include <cstdint>
#include <optional>
#include <vector>

#include "grossgame/gross.hpp"
#include "grossgame/linalg.hpp"
#include "grossgame/payoffs.hpp"
#include "grossgame/strategy.hpp"

namespace grossgame::stoch {

template <class S>
struct PairChain {
  Vec4<S> initial;     // A
  Mat4<S> transition;  // L
};

// Chain of the pairing seen from `first` (rows mirror CD/DC for `second`).
PairChain<Rational> build_chain(const Strategy& first, const Strategy& second);
PairChain<double> to_double(const PairChain<Rational>& chain);

struct VisitSum {
  Vec4<Rational> total;  // sum_{t=1}^{n} A L^{t-1}
  Vec4<Rational> next;   // A L^{n}
};

VisitSum visit_sum(const PairChain<Rational>& chain, std::uint64_t rounds);

// Per-player expectation after n rounds with every other player, as forms
// in the payoffs (exact rational coefficients).
std::vector<PayoffForm> exact_expectation(const std::vector<Strategy>& players,
                                          std::uint64_t rounds);

// Gap vector D with Delta(k, j, n) = D Q^T.
Vec4<Rational> delta_exact(const std::vector<Strategy>& players, std::size_t k,
                           std::size_t j, std::uint64_t rounds);

// Largest stationarity threshold over the chains a player of `involved`
// takes part in.
std::size_t stationarity_threshold(const std::vector<Strategy>& players,
                                   const std::vector<std::size_t>& involved,
                                   const StationarityOptions& options = {});

struct DeltaLine {
  std::size_t threshold = 0;  // n~
  Vec4<Rational> transient;   // F
  Vec4<Rational> increment;   // G

  // Components of F - threshold * G.
  Vec4<Rational> intercept_weights() const;
  PayoffForm alpha() const;  // (F - threshold G) Q^T
  PayoffForm beta() const;   // G Q^T
  bool degenerate() const;   // G == 0
};

// Expectation line of one player against all others (DeltaLine of two players
// is the difference of their player lines at a common threshold).
DeltaLine player_line(const std::vector<Strategy>& players, std::size_t k,
                      std::size_t threshold);

// Line for the gap between players k and j at the tournament threshold.
// Throws NotConverged when some chain never becomes stationary.
DeltaLine delta_line(const std::vector<Strategy>& players, std::size_t k,
                     std::size_t j, const StationarityOptions& options = {});

// Line that reproduces Delta(k, j, rounds) exactly at n = rounds (threshold
// rounds - 1, G the last round's gap).
DeltaLine exact_line(const std::vector<Strategy>& players, std::size_t k,
                     std::size_t j, std::uint64_t rounds);

// alpha + n beta. Throws BelowStationarity unless n > threshold.
PayoffForm delta_tilde_at(const DeltaLine& line, const GrossScalar& n);
GrossScalar delta_tilde_at(const DeltaLine& line, const GrossScalar& n,
                           const Payoffs& payoffs);

struct StochasticResult {
  std::optional<std::size_t> threshold;  // set for infinite n
  std::vector<PayoffForm> totals;        // exact (finite n) or line value
  std::optional<std::vector<RankGroup>> ranking;
};

// Finite n: exact expectations. Infinite n: per-player lines evaluated at n.
StochasticResult tournament(const std::vector<Strategy>& players,
                            const Payoffs& payoffs, const GrossScalar& n,
                            const StationarityOptions& options = {});

// Natural finite value of n, if it is one.
std::optional<std::uint64_t> finite_rounds(const GrossScalar& n);

}  // namespace grossgame::stoch
