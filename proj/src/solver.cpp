#include "grossgame/solver.hpp"

#include <algorithm>

#include "grossgame/errors.hpp"
#include "grossgame/literal.hpp"

namespace grossgame::solver {
namespace {

// Shifted payoffs from highest to lowest.
constexpr std::array<Payoff, 3> kShifted = {Payoff::T, Payoff::R, Payoff::P};

bool all_zero(const Vec4<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// sum over `which` of weights[p] * shift(p); nullopt if a needed shift is
// missing.
std::optional<GrossScalar> weighted_shifts(const Vec4<Rational>& weights,
                                           const ShiftParams& shifts,
                                           std::initializer_list<Payoff> which) {
  GrossScalar acc = 0;
  for (Payoff p : which) {
    const Rational& w = weights[index(p)];
    if (w == 0) continue;
    const auto& d = shifts.shift(p);
    if (!d) return std::nullopt;
    acc += GrossScalar(w) * *d;
  }
  return acc;
}

void require_positive_tau(const GrossScalar& tau) {
  if (tau.sign() <= 0) throw Error("tau must be positive, got " + format_gross(tau));
}

// Open interval between two bounds in either order.
OpenInterval ordered(GrossScalar a, GrossScalar b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace

const std::optional<GrossScalar>& ShiftParams::shift(Payoff p) const {
  switch (p) {
    case Payoff::T:
      return delta_T;
    case Payoff::R:
      return delta_R;
    case Payoff::P:
      return delta_P;
    case Payoff::S:
      break;
  }
  throw Error("S has no shift");
}

std::optional<GrossScalar>& ShiftParams::shift(Payoff p) {
  return const_cast<std::optional<GrossScalar>&>(
      static_cast<const ShiftParams&>(*this).shift(p));
}

GammaCoeffs gammas(const Vec4<Rational>& lambda, const Vec4<Rational>& mu,
                   const ShiftParams& shifts) {
  if (all_zero(mu)) throw DegenerateBeta();
  GammaCoeffs g;
  g.lambda = lambda;
  g.mu = mu;
  g.gamma1 = mu[0] + mu[1] + mu[2] + mu[3];
  g.gamma2 = lambda[0] + lambda[1] + lambda[2] + lambda[3];
  g.gamma3 = weighted_shifts(mu, shifts, {Payoff::R, Payoff::T, Payoff::P});
  g.gamma4 = weighted_shifts(lambda, shifts, {Payoff::R, Payoff::T, Payoff::P});
  g.gamma5 = weighted_shifts(mu, shifts, {Payoff::R, Payoff::P});
  g.gamma6 = weighted_shifts(lambda, shifts, {Payoff::R, Payoff::P});
  return g;
}

GammaCoeffs gammas(const stoch::DeltaLine& line, const ShiftParams& shifts) {
  return gammas(line.intercept_weights(), line.increment, shifts);
}

const char* to_string(SolutionCase c) {
  return c == SolutionCase::Gamma1NonZero ? "gamma1_nonzero" : "gamma1_zero";
}

SolutionSet solve_gamma1_nonzero(const GammaCoeffs& g, const ShiftParams& shifts,
                                 const GrossScalar& tau, const GrossScalar& n) {
  require_positive_tau(tau);
  if (!shifts.delta_T || !shifts.delta_R || !shifts.delta_P) {
    throw Error("the gamma1 != 0 case needs delta_T, delta_R and delta_P");
  }
  const auto g3 = *weighted_shifts(g.mu, shifts, {Payoff::R, Payoff::T, Payoff::P});
  const auto g4 =
      *weighted_shifts(g.lambda, shifts, {Payoff::R, Payoff::T, Payoff::P});
  const GrossScalar slope = GrossScalar(g.gamma1) * n + GrossScalar(g.gamma2);
  if (slope.is_zero()) {
    throw EmptySolution("g1 n + g2 vanishes at n = " + format_gross(n));
  }
  const GrossScalar offset = g3 * n + g4;

  SolutionSet set;
  set.kind = SolutionCase::Gamma1NonZero;
  set.pivot = Payoff::S;
  set.shift_interval = ordered(-offset / slope, (tau - offset) / slope);
  set.pivot_interval = set.shift_interval;
  set.width = abs(tau / slope);
  set.width_class = set.width.classify();
  set.shifts = shifts;
  set.shifts.S.reset();
  set.law_compatible = *shifts.delta_T > *shifts.delta_R &&
                       *shifts.delta_R > *shifts.delta_P &&
                       shifts.delta_P->sign() > 0;
  if (set.law_compatible) set.admissible = set.shift_interval;
  return set;
}

SolutionSet solve_gamma1_zero(const GammaCoeffs& g, const ShiftParams& shifts,
                              const GrossScalar& tau, const GrossScalar& n) {
  require_positive_tau(tau);
  std::optional<Payoff> pivot;
  for (Payoff p : {Payoff::T, Payoff::R, Payoff::P}) {
    if (g.mu[index(p)] != 0) {
      pivot = p;
      break;
    }
  }
  if (!pivot) throw NoPivot();

  GrossScalar S = 0;
  if (shifts.S) {
    S = *shifts.S;
  } else if (g.gamma2 != 0) {
    throw Error("S must be supplied when gamma2 != 0");
  }

  auto coefficient = [&](Payoff p) {
    return GrossScalar(g.mu[index(p)]) * n + GrossScalar(g.lambda[index(p)]);
  };
  GrossScalar rest = GrossScalar(g.gamma2) * S;
  SolutionSet set;
  set.shifts.S = S;
  for (Payoff p : kShifted) {
    if (p == *pivot) continue;
    const bool matters = g.mu[index(p)] != 0 || g.lambda[index(p)] != 0;
    const auto& d = shifts.shift(p);
    if (matters && !d) {
      throw Error(std::string("shift of ") + symbol(p) +
                  " must be supplied: it carries weight in the gap line");
    }
    if (matters) rest += coefficient(p) * *d;
    set.shifts.shift(p) = d;
  }
  const GrossScalar c = coefficient(*pivot);
  if (c.is_zero()) {
    throw EmptySolution(std::string("coefficient of the ") + symbol(*pivot) +
                        " shift vanishes at n = " + format_gross(n));
  }

  set.kind = SolutionCase::Gamma1Zero;
  set.pivot = *pivot;
  set.S = S;
  set.shift_interval = ordered(-rest / c, (tau - rest) / c);
  set.pivot_interval = set.shift_interval.shifted(S);
  set.width = abs(tau / c);
  set.width_class = set.width.classify();

  // Ordering constraints the fixed shifts impose on the pivot shift.
  bool consistent = true;
  std::optional<GrossScalar> upper;
  GrossScalar lower = 0;
  std::optional<GrossScalar> previous;  // last fixed shift seen, top-down
  bool below_pivot = false;
  for (Payoff p : kShifted) {
    if (p == *pivot) {
      below_pivot = true;
      continue;
    }
    const auto& d = set.shifts.shift(p);
    if (!d) continue;
    if (d->sign() <= 0 || (previous && !(*d < *previous))) consistent = false;
    previous = d;
    if (below_pivot) {
      if (*d > lower) lower = *d;
    } else if (!upper || *d < *upper) {
      upper = *d;
    }
  }
  OpenInterval window{std::max(set.shift_interval.lower, lower),
                      upper ? std::min(set.shift_interval.upper, *upper)
                            : set.shift_interval.upper};
  set.law_compatible = consistent && !window.empty();
  if (set.law_compatible) set.admissible = window;
  return set;
}

std::optional<OpenInterval> SolutionSet::range(Payoff p) const {
  if (kind == SolutionCase::Gamma1NonZero) {
    if (p == Payoff::S) return shift_interval;
    return shift_interval.shifted(*shifts.shift(p));
  }
  if (p == pivot) return pivot_interval;
  return std::nullopt;
}

Payoffs SolutionSet::sample(const Rational& fraction) const {
  GrossScalar base;
  std::array<std::optional<GrossScalar>, 3> d;  // T, R, P
  for (std::size_t i = 0; i < 3; ++i) d[i] = shifts.shift(kShifted[i]);
  if (kind == SolutionCase::Gamma1NonZero) {
    base = shift_interval.at(fraction);
  } else {
    base = *S;
    for (std::size_t i = 0; i < 3; ++i) {
      if (kShifted[i] == pivot) d[i] = shift_interval.at(fraction);
    }
  }
  // Fill runs of free shifts between their known neighbours (S sits at 0).
  for (std::size_t i = 0; i < 3;) {
    if (d[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < 3 && !d[j]) ++j;
    const long run = static_cast<long>(j - i);
    const GrossScalar below = j < 3 ? *d[j] : GrossScalar(0);
    for (long s = 0; s < run; ++s) {
      if (i > 0) {
        const GrossScalar& above = *d[i - 1];
        d[i + s] = above - (above - below) * GrossScalar(Rational(s + 1, run + 1));
      } else {
        d[i + s] = below + GrossScalar(run - s);
      }
    }
    i = j;
  }
  return Payoffs(base + *d[0], base + *d[1], base + *d[2], base);
}

ValidationReport validate_solution(const Payoffs& sample,
                                   const stoch::DeltaLine& line,
                                   const ModelSpec& spec) {
  if (!sample.concrete()) throw Error("validation needs concrete payoffs");
  ValidationReport report;
  report.delta = stoch::delta_tilde_at(line, spec.n, sample);
  report.T_above_R = *sample[Payoff::T] > *sample[Payoff::R];
  report.R_above_P = *sample[Payoff::R] > *sample[Payoff::P];
  report.P_above_S = *sample[Payoff::P] > *sample[Payoff::S];
  report.positive = report.delta.sign() > 0;
  report.below_tau = report.delta < spec.tau;
  return report;
}

RivalChoice select_rival(const std::vector<Strategy>& players,
                         const ModelSpec& spec,
                         const StationarityOptions& options) {
  const std::size_t m = players.size();
  if (m < 2) throw Error("the model needs at least two players");
  if (spec.target >= m) throw Error("target index out of range");
  if (spec.rival) {
    if (*spec.rival >= m || *spec.rival == spec.target) {
      throw Error("rival index must differ from the target and be in range");
    }
    return {*spec.rival, false};
  }
  if (m == 2) return {spec.target == 0 ? std::size_t{1} : std::size_t{0}, false};

  auto result = stoch::tournament(players, spec.reference, spec.n, options);
  std::optional<std::size_t> best;
  bool tie = false;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == spec.target) continue;
    const GrossScalar& value = result.totals[j].constant();
    if (!best) {
      best = j;
    } else if (value > result.totals[*best].constant()) {
      best = j;
      tie = false;
    } else if (value == result.totals[*best].constant()) {
      tie = true;
    }
  }
  return {*best, tie};
}

ModelSolution solve_model(const std::vector<Strategy>& players,
                          const ModelSpec& spec, const ShiftParams& shifts,
                          const StationarityOptions& options) {
  require_positive_tau(spec.tau);
  ModelSolution out;
  out.rival = select_rival(players, spec, options);
  if (auto rounds = stoch::finite_rounds(spec.n)) {
    out.line = stoch::exact_line(players, spec.target, out.rival.index, *rounds);
    out.exact = true;
  } else {
    if (spec.n.classify() != Magnitude::Infinite || spec.n.sign() < 0) {
      throw InvalidRoundCount("n = " + format_gross(spec.n) +
                              " is neither a positive integer nor infinite");
    }
    out.line = stoch::delta_line(players, spec.target, out.rival.index, options);
  }
  out.gammas = gammas(out.line, shifts);
  out.set = out.gammas.gamma1 != 0
                ? solve_gamma1_nonzero(out.gammas, shifts, spec.tau, spec.n)
                : solve_gamma1_zero(out.gammas, shifts, spec.tau, spec.n);
  return out;
}

}  // namespace grossgame::solver
