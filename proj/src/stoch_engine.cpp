#include "grossgame/stoch_engine.hpp"

#include <algorithm>
#include <string>

#include "grossgame/errors.hpp"
#include "grossgame/literal.hpp"

namespace grossgame::stoch {
namespace {

Vec4<Rational> row(const Rational& a, const Rational& b) {
  return {a * b, a * (1 - b), (1 - a) * b, (1 - a) * (1 - b)};
}

Integer lcm_of_denominators(const Vec4<Rational>& v, Integer acc) {
  for (const auto& x : v) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), x.get_den().get_mpz_t());
  }
  return acc;
}

// x * multiple, where multiple is a multiple of x's denominator.
Integer scale_to_integer(const Rational& x, const Integer& multiple) {
  return x.get_num() * (multiple / x.get_den());
}

Vec4<Rational> zero4() { return {0, 0, 0, 0}; }

void check_pair(const std::vector<Strategy>& players, std::size_t k,
                std::size_t j) {
  if (players.size() < 2) throw Error("a tournament needs at least two players");
  if (k >= players.size() || j >= players.size() || k == j) {
    throw Error("player indices must be distinct and in range");
  }
}

}  // namespace

PairChain<Rational> build_chain(const Strategy& first, const Strategy& second) {
  PairChain<Rational> chain;
  chain.initial = row(first.initial(), second.initial());
  // The second player sees CD and DC swapped.
  chain.transition = {row(first.after(0), second.after(0)),
                      row(first.after(1), second.after(2)),
                      row(first.after(2), second.after(1)),
                      row(first.after(3), second.after(3))};
  return chain;
}

PairChain<double> to_double(const PairChain<Rational>& chain) {
  PairChain<double> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.initial[i] = chain.initial[i].get_d();
    for (std::size_t j = 0; j < 4; ++j) {
      out.transition[i][j] = chain.transition[i][j].get_d();
    }
  }
  return out;
}

VisitSum visit_sum(const PairChain<Rational>& chain, std::uint64_t rounds) {
  // v_t = u_t / (dA * dL^{t-1}) with integer u_t; the running total is kept
  // over the denominator dA * dL^{t-1} as well (Horner in dL).
  const Integer dA = lcm_of_denominators(chain.initial, 1);
  Integer dL = 1;
  for (const auto& r : chain.transition) dL = lcm_of_denominators(r, dL);

  Vec4<Integer> u;
  Mat4<Integer> m;
  for (std::size_t i = 0; i < 4; ++i) {
    u[i] = scale_to_integer(chain.initial[i], dA);
    for (std::size_t j = 0; j < 4; ++j) {
      m[i][j] = scale_to_integer(chain.transition[i][j], dL);
    }
  }
  Vec4<Integer> acc{0, 0, 0, 0};
  for (std::uint64_t t = 1; t <= rounds; ++t) {
    for (std::size_t i = 0; i < 4; ++i) acc[i] = acc[i] * dL + u[i];
    u = vec_mat(u, m);
  }

  VisitSum out;
  if (rounds == 0) {
    out.total = zero4();
    out.next = chain.initial;
    return out;
  }
  Integer scale_next;
  mpz_pow_ui(scale_next.get_mpz_t(), dL.get_mpz_t(), rounds);
  scale_next *= dA;
  const Integer scale_total = scale_next / dL;
  for (std::size_t i = 0; i < 4; ++i) {
    out.total[i] = Rational(acc[i], scale_total);
    out.total[i].canonicalize();
    out.next[i] = Rational(u[i], scale_next);
    out.next[i].canonicalize();
  }
  return out;
}

std::vector<PayoffForm> exact_expectation(const std::vector<Strategy>& players,
                                          std::uint64_t rounds) {
  std::vector<PayoffForm> totals;
  totals.reserve(players.size());
  for (std::size_t k = 0; k < players.size(); ++k) {
    Vec4<Rational> weights = zero4();
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (i == k) continue;
      weights = weights + visit_sum(build_chain(players[k], players[i]), rounds).total;
    }
    totals.push_back(PayoffForm::from_weights(weights));
  }
  return totals;
}

Vec4<Rational> delta_exact(const std::vector<Strategy>& players, std::size_t k,
                           std::size_t j, std::uint64_t rounds) {
  check_pair(players, k, j);
  Vec4<Rational> d = zero4();
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (i != k) d = d + visit_sum(build_chain(players[k], players[i]), rounds).total;
    if (i != j) d = d - visit_sum(build_chain(players[j], players[i]), rounds).total;
  }
  return d;
}

std::size_t stationarity_threshold(const std::vector<Strategy>& players,
                                   const std::vector<std::size_t>& involved,
                                   const StationarityOptions& options) {
  std::size_t threshold = 0;
  for (std::size_t k : involved) {
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (i == k) continue;
      const auto chain = to_double(build_chain(players[k], players[i]));
      threshold = std::max(threshold,
                           find_stationarity(chain.transition, options).threshold);
    }
  }
  return threshold;
}

Vec4<Rational> DeltaLine::intercept_weights() const {
  return transient - scaled(increment, Rational(threshold));
}

PayoffForm DeltaLine::alpha() const {
  return PayoffForm::from_weights(intercept_weights());
}

PayoffForm DeltaLine::beta() const { return PayoffForm::from_weights(increment); }

bool DeltaLine::degenerate() const {
  return std::all_of(increment.begin(), increment.end(),
                     [](const Rational& x) { return x == 0; });
}

DeltaLine player_line(const std::vector<Strategy>& players, std::size_t k,
                      std::size_t threshold) {
  DeltaLine line{threshold, zero4(), zero4()};
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (i == k) continue;
    VisitSum s = visit_sum(build_chain(players[k], players[i]), threshold);
    line.transient = line.transient + s.total;
    line.increment = line.increment + s.next;
  }
  return line;
}

namespace {

DeltaLine difference(const DeltaLine& a, const DeltaLine& b) {
  return {a.threshold, a.transient - b.transient, a.increment - b.increment};
}

}  // namespace

DeltaLine delta_line(const std::vector<Strategy>& players, std::size_t k,
                     std::size_t j, const StationarityOptions& options) {
  check_pair(players, k, j);
  const std::size_t threshold = stationarity_threshold(players, {k, j}, options);
  return difference(player_line(players, k, threshold),
                    player_line(players, j, threshold));
}

DeltaLine exact_line(const std::vector<Strategy>& players, std::size_t k,
                     std::size_t j, std::uint64_t rounds) {
  check_pair(players, k, j);
  if (rounds == 0) throw InvalidRoundCount("round count must be at least 1");
  const auto threshold = static_cast<std::size_t>(rounds - 1);
  return difference(player_line(players, k, threshold),
                    player_line(players, j, threshold));
}

PayoffForm delta_tilde_at(const DeltaLine& line, const GrossScalar& n) {
  const GrossScalar threshold(static_cast<long>(line.threshold));
  if (!(n > threshold)) {
    throw BelowStationarity("n = " + format_gross(n) +
                            " does not exceed the stationarity threshold " +
                            std::to_string(line.threshold));
  }
  return line.alpha() + line.beta() * n;
}

GrossScalar delta_tilde_at(const DeltaLine& line, const GrossScalar& n,
                           const Payoffs& payoffs) {
  auto value = delta_tilde_at(line, n).evaluate(payoffs);
  if (!value) throw Error("payoffs with nonzero weight are still symbolic");
  return *value;
}

std::optional<std::uint64_t> finite_rounds(const GrossScalar& n) {
  auto finite = n.as_rational();
  if (!finite || !is_integer(*finite) || *finite < 1) return std::nullopt;
  return std::stoull(finite->get_num().get_str());
}

StochasticResult tournament(const std::vector<Strategy>& players,
                            const Payoffs& payoffs, const GrossScalar& n,
                            const StationarityOptions& options) {
  if (players.size() < 2) throw Error("a tournament needs at least two players");
  StochasticResult result;
  if (auto rounds = finite_rounds(n)) {
    for (auto& total : exact_expectation(players, *rounds)) {
      result.totals.push_back(total.substitute(payoffs));
    }
  } else {
    if (n.classify() != Magnitude::Infinite || n.sign() < 0) {
      throw InvalidRoundCount("round count " + format_gross(n) +
                              " is neither a positive integer nor infinite");
    }
    std::vector<std::size_t> everyone(players.size());
    for (std::size_t k = 0; k < players.size(); ++k) everyone[k] = k;
    const std::size_t threshold = stationarity_threshold(players, everyone, options);
    result.threshold = threshold;
    for (std::size_t k = 0; k < players.size(); ++k) {
      const DeltaLine line = player_line(players, k, threshold);
      result.totals.push_back(delta_tilde_at(line, n).substitute(payoffs));
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

}  // namespace grossgame::stoch
