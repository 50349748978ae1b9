#include "grossgame/det_engine.hpp"

#include <array>

#include "grossgame/errors.hpp"
#include "grossgame/literal.hpp"

namespace grossgame::det {
namespace {

Outcome outcome_of(bool first_cooperates, bool second_cooperates) {
  if (first_cooperates) return second_cooperates ? Outcome::CC : Outcome::CD;
  return second_cooperates ? Outcome::DC : Outcome::DD;
}

std::size_t idx(Outcome o) { return static_cast<std::size_t>(o); }

void require_deterministic(const Strategy& s) {
  if (!s.deterministic()) {
    throw NonDeterministicStrategy("strategy " + format_strategy(s) +
                                   " has parameters outside {0, 1}");
  }
}

PayoffForm sum_outcomes(const std::vector<Outcome>& outcomes,
                        std::size_t count) {
  Vec4<Rational> visits{0, 0, 0, 0};
  for (std::size_t i = 0; i < count; ++i) visits[idx(outcomes[i])] += 1;
  return PayoffForm::from_weights(visits);
}

}  // namespace

Outcome mirror(Outcome o) {
  switch (o) {
    case Outcome::CD:
      return Outcome::DC;
    case Outcome::DC:
      return Outcome::CD;
    default:
      return o;
  }
}

const char* to_string(Outcome o) {
  static constexpr std::array<const char*, 4> kNames = {"CC", "CD", "DC", "DD"};
  return kNames[idx(o)];
}

Payoff payoff_of(Outcome o) { return static_cast<Payoff>(idx(o)); }

PairTrace play_pair(const Strategy& first, const Strategy& second) {
  require_deterministic(first);
  require_deterministic(second);

  std::vector<Outcome> history;
  Outcome current = outcome_of(first.initial() == 1, second.initial() == 1);
  for (;;) {
    for (std::size_t i = 0; i < history.size(); ++i) {
      if (history[i] == current) {
        PairTrace trace;
        trace.transient.assign(history.begin(), history.begin() + i);
        trace.cycle.assign(history.begin() + i, history.end());
        return trace;
      }
    }
    history.push_back(current);
    current = outcome_of(first.after(idx(current)) == 1,
                         second.after(idx(mirror(current))) == 1);
  }
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  return {a.intercept + b.intercept, a.slope + b.slope};
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) {
  return {a.intercept - b.intercept, a.slope - b.slope};
}

RoundSplit split_rounds(const GrossScalar& n, std::size_t transient_length,
                        std::size_t cycle_length) {
  if (!n.is_polynomial()) {
    throw InvalidRoundCount("round count " + format_gross(n) +
                            " is not a gross polynomial");
  }
  for (const auto& term : n.numerator().terms()) {
    if (term.power < 0 || !is_integer(term.power)) {
      throw InvalidRoundCount("round count " + format_gross(n) +
                              " has a negative or fractional gross-power");
    }
  }
  const Rational finite = n.finite_part();
  if (!is_integer(finite)) {
    throw InvalidRoundCount("round count " + format_gross(n) +
                            " has a non-integer finite part");
  }
  if (n < GrossScalar(static_cast<long>(transient_length)) || n < GrossScalar(1)) {
    throw InvalidRoundCount("round count " + format_gross(n) +
                            " is shorter than the transient");
  }
  Integer r = (finite.get_num() - transient_length) % Integer(cycle_length);
  if (r < 0) r += cycle_length;
  const auto remainder = static_cast<std::size_t>(r.get_ui());
  GrossScalar completed =
      (n - GrossScalar(static_cast<long>(transient_length + remainder))) /
      GrossScalar(static_cast<long>(cycle_length));
  return {std::move(completed), remainder};
}

AffineExpectation::AffineExpectation(PairTrace trace)
    : trace_(std::move(trace)),
      transient_sum_(sum_outcomes(trace_.transient, trace_.transient.size())),
      cycle_sum_(sum_outcomes(trace_.cycle, trace_.cycle.size())) {}

AffineForm AffineExpectation::closed_form(std::size_t residue) const {
  const long t = static_cast<long>(trace_.transient.size());
  const long len = static_cast<long>(trace_.cycle.size());
  residue %= trace_.cycle.size();
  // E(n) = transient + ((n - t - r) / L) * cycle + partial(r)
  const GrossScalar offset =
      GrossScalar(Rational(t + static_cast<long>(residue), len));
  AffineForm form;
  form.intercept = transient_sum_ + sum_outcomes(trace_.cycle, residue) -
                   cycle_sum_ * offset;
  form.slope = cycle_sum_ * GrossScalar(Rational(1, len));
  return form;
}

AffineForm AffineExpectation::symbolic_form() const {
  const std::size_t len = trace_.cycle.size();
  const std::size_t t = trace_.transient.size();
  return closed_form((len - t % len) % len);
}

PayoffForm AffineExpectation::prefix_sum(std::size_t rounds) const {
  return sum_outcomes(trace_.transient, rounds);
}

PayoffForm AffineExpectation::at(std::uint64_t n) const {
  const std::size_t t = trace_.transient.size();
  if (n <= t) return prefix_sum(static_cast<std::size_t>(n));
  const std::uint64_t len = trace_.cycle.size();
  const std::uint64_t completed = (n - t) / len;
  const auto remainder = static_cast<std::size_t>((n - t) % len);
  return transient_sum_ +
         cycle_sum_ * GrossScalar(Rational(Integer(std::to_string(completed)))) +
         sum_outcomes(trace_.cycle, remainder);
}

PayoffForm AffineExpectation::at(const GrossScalar& n) const {
  if (auto finite = n.as_rational()) {
    if (!is_integer(*finite) || *finite < 1) {
      throw InvalidRoundCount("round count " + format_gross(n) +
                              " is not a positive integer");
    }
    return at(std::stoull(finite->get_num().get_str()));
  }
  RoundSplit split = split_rounds(n, trace_.transient.size(), trace_.cycle.size());
  return transient_sum_ + cycle_sum_ * split.completed_cycles +
         sum_outcomes(trace_.cycle, split.remainder);
}

AffineExpectation pair_expectation(const Strategy& first,
                                   const Strategy& second) {
  return AffineExpectation(play_pair(first, second));
}

PayoffForm simulate_rounds(const Strategy& first, const Strategy& second,
                           std::uint64_t n) {
  require_deterministic(first);
  require_deterministic(second);
  std::array<std::uint64_t, 4> visits{};
  bool a = first.initial() == 1;
  bool b = second.initial() == 1;
  for (std::uint64_t round = 0; round < n; ++round) {
    const Outcome o = outcome_of(a, b);
    ++visits[idx(o)];
    a = first.after(idx(o)) == 1;
    b = second.after(idx(mirror(o))) == 1;
  }
  Vec4<Rational> weights;
  for (std::size_t k = 0; k < 4; ++k) {
    weights[k] = Rational(Integer(std::to_string(visits[k])));
  }
  return PayoffForm::from_weights(weights);
}

TournamentResult tournament(const std::vector<Strategy>& players,
                            const Payoffs& payoffs, const GrossScalar& n) {
  if (players.size() < 2) throw Error("a tournament needs at least two players");
  const std::size_t m = players.size();
  TournamentResult result;
  result.pair.assign(m, std::vector<PayoffForm>(m));
  result.totals.assign(m, PayoffForm{});
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      result.pair[k][j] =
          pair_expectation(players[k], players[j]).at(n).substitute(payoffs);
      result.totals[k] += result.pair[k][j];
    }
  }
  std::vector<GrossScalar> values;
  for (const auto& total : result.totals) {
    if (!total.is_constant()) return result;
    values.push_back(total.constant());
  }
  result.ranking = rank_players(values);
  return result;
}

SymbolicTable symbolic_tournament(const std::vector<Strategy>& players) {
  if (players.size() < 2) throw Error("a tournament needs at least two players");
  const std::size_t m = players.size();
  SymbolicTable table;
  table.pair.assign(m, std::vector<AffineForm>(m));
  table.totals.assign(m, AffineForm{});
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      table.pair[k][j] = pair_expectation(players[k], players[j]).symbolic_form();
      table.totals[k] = table.totals[k] + table.pair[k][j];
    }
  }
  return table;
}

OpenInterval existence_interval_R(const GrossScalar& T, const GrossScalar& P,
                                  const GrossScalar& S) {
  const GrossScalar spread = GrossScalar(2) * T - P - S;
  if (spread.sign() <= 0) {
    throw EmptyInterval("2T - P - S = " + format_gross(spread) +
                        " is not positive");
  }
  return {P, P + spread * GrossScalar::monomial(1, -1)};
}

}  // namespace grossgame::det
