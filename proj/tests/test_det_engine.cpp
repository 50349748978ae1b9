#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "grossgame/det_engine.hpp"
#include "grossgame/errors.hpp"
#include "grossgame/literal.hpp"

using namespace grossgame;
using namespace grossgame::det;
using grossgame::testing::all_deterministic_strategies;

namespace {

const GrossScalar g = GrossScalar::grossone();

PayoffForm F(Payoff p, long c = 1) { return PayoffForm::of(p, c); }

// a + b n as an affine form.
AffineForm affine(PayoffForm a, PayoffForm b) { return {std::move(a), std::move(b)}; }

std::vector<Strategy> du_trigger_tft() {
  return {Strategy::always_defect(), Strategy::trigger(), Strategy::tit_for_tat()};
}

}  // namespace

TEST_CASE("pair traces") {
  auto trace = play_pair(Strategy::always_defect(), Strategy::trigger());
  REQUIRE(trace.transient.size() == 1);
  CHECK(trace.transient[0] == Outcome::DC);
  REQUIRE(trace.cycle.size() == 1);
  CHECK(trace.cycle[0] == Outcome::DD);

  auto alternating = play_pair(Strategy::tit_for_tat(), Strategy::suspicious_tit_for_tat());
  CHECK(alternating.transient.empty());
  REQUIRE(alternating.cycle.size() == 2);
  CHECK(alternating.cycle[0] == Outcome::CD);
  CHECK(alternating.cycle[1] == Outcome::DC);

  CHECK_THROWS_AS(play_pair(Strategy(Rational(1, 2), 1, 0, 1, 0), Strategy::trigger()),
                  NonDeterministicStrategy);
}

TEST_CASE("symbolic table for Du, TRIGGER and TFT") {
  const auto table = symbolic_tournament(du_trigger_tft());
  const PayoffForm none;
  // Du against either opponent: T + (n-1)P.
  CHECK(table.pair[0][1] == affine(F(Payoff::T) - F(Payoff::P), F(Payoff::P)));
  CHECK(table.pair[0][2] == affine(F(Payoff::T) - F(Payoff::P), F(Payoff::P)));
  // Victims of Du: S + (n-1)P.
  CHECK(table.pair[1][0] == affine(F(Payoff::S) - F(Payoff::P), F(Payoff::P)));
  CHECK(table.pair[2][0] == affine(F(Payoff::S) - F(Payoff::P), F(Payoff::P)));
  // TRIGGER and TFT cooperate throughout: nR.
  CHECK(table.pair[1][2] == affine(none, F(Payoff::R)));
  CHECK(table.pair[2][1] == affine(none, F(Payoff::R)));
  // Totals.
  CHECK(table.totals[0] == affine(F(Payoff::T, 2) - F(Payoff::P, 2), F(Payoff::P, 2)));
  const AffineForm victim =
      affine(F(Payoff::S) - F(Payoff::P), F(Payoff::R) + F(Payoff::P));
  CHECK(table.totals[1] == victim);
  CHECK(table.totals[2] == victim);
  CHECK(format_affine(table.pair[0][1].intercept, table.pair[0][1].slope) == "T+(n-1)P");
  CHECK(format_affine(table.totals[0].intercept, table.totals[0].slope) ==
        "2T+(2n-2)P");
  CHECK(format_affine(table.totals[1].intercept, table.totals[1].slope) ==
        "nR+(n-1)P+S");
}

TEST_CASE("grossone tournament ranking") {
  const Payoffs payoffs(10, parse_gross("4+17/2g^-1"), 4, -1);
  const auto result = tournament(du_trigger_tft(), payoffs, g);
  REQUIRE(result.ranking);
  const auto& ranking = *result.ranking;
  REQUIRE(ranking.size() == 2);
  CHECK(ranking[0].players == std::vector<std::size_t>{0});
  CHECK(ranking[0].value == parse_gross("8g+12"));
  CHECK(ranking[1].place == 2);
  CHECK(ranking[1].players == std::vector<std::size_t>{1, 2});
  CHECK(ranking[1].value == parse_gross("8g+3.5"));
}

TEST_CASE("identical strategies tie") {
  const std::vector<Strategy> players{Strategy::tit_for_tat(), Strategy::tit_for_tat()};
  const auto result = tournament(players, Payoffs(5, 3, 1, 0), 50);
  REQUIRE(result.ranking);
  REQUIRE(result.ranking->size() == 1);
  CHECK(result.ranking->front().players.size() == 2);
}

TEST_CASE("existence interval for R") {
  const OpenInterval r = existence_interval_R(10, 4, -1);
  CHECK(r.lower == GrossScalar(4));
  CHECK(r.upper == parse_gross("4+17g^-1"));
  CHECK(r.width().classify() == Magnitude::Infinitesimal);
  CHECK_THROWS_AS(existence_interval_R(1, 4, -2), EmptyInterval);
}

TEST_CASE("round count validation") {
  const auto e = pair_expectation(Strategy::always_defect(), Strategy::trigger());
  CHECK_THROWS_AS(e.at(parse_gross("g^-1")), InvalidRoundCount);
  CHECK_THROWS_AS(e.at(parse_gross("1/(g+1)")), InvalidRoundCount);
  CHECK_THROWS_AS(e.at(parse_gross("g+1/2")), InvalidRoundCount);
  CHECK_THROWS_AS(e.at(GrossScalar(0)), InvalidRoundCount);
  CHECK_THROWS_AS(e.at(parse_gross("-g")), InvalidRoundCount);
  CHECK_NOTHROW(e.at(parse_gross("g/2")));
}

TEST_CASE("property: closed form matches round-by-round play") {
  const auto all = all_deterministic_strategies();
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto e = pair_expectation(a, b);
      const std::size_t t = e.trace().transient.size();
      const std::size_t len = e.trace().cycle.size();
      CHECK(t + len <= 5);
      for (std::uint64_t n = 1; n <= 60; ++n) {
        const PayoffForm sim = simulate_rounds(a, b, n);
        CHECK(e.at(n) == sim);
        if (n >= t) CHECK(e.closed_form((n - t) % len).at(GrossScalar(static_cast<long>(n))) == sim);
      }
    }
  }
}

TEST_CASE("property: grossone round counts behave like large multiples of the cycle") {
  std::mt19937 rng(31);
  const auto all = all_deterministic_strategies();
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto e = pair_expectation(all[pick(rng)], all[pick(rng)]);
    const long len = static_cast<long>(e.trace().cycle.size());
    const GrossScalar start(static_cast<long>(e.trace().transient.size()) + len);
    const PayoffForm cycle = e.at(start + GrossScalar(len)) - e.at(start);
    // One more cycle adds the cycle sum.
    for (long k = 0; k < 6; ++k) {
      const GrossScalar n = g + GrossScalar(k);
      CHECK(e.at(n + GrossScalar(len)) - e.at(n) == cycle);
    }
    // At n = grossone the symbolic form applies.
    CHECK(e.symbolic_form().at(g) == e.at(g));
    CHECK(e.symbolic_form().at(GrossScalar(3) * g) == e.at(GrossScalar(3) * g));
    // Positive payoffs accumulate to an infinite total.
    CHECK(e.at(g).evaluate(Payoffs(5, 3, 1, Rational(1, 2)))->classify() ==
          Magnitude::Infinite);
  }
}
