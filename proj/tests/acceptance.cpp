// Acceptance checks. Each criterion prints one line:
//
//   [PASS] 7  approximation quality: ...
//
// Run without arguments for all criteria or with criterion numbers to run a
// subset. The exit code is 0 only when every selected criterion passes.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grossgame/det_engine.hpp"
#include "grossgame/errors.hpp"
#include "grossgame/literal.hpp"
#include "grossgame/solver.hpp"
#include "grossgame/stoch_engine.hpp"

namespace {

using namespace grossgame;

// Tolerances.
constexpr double kMatrixTolerance = 1e-12;         // printed transition entries
constexpr double kStationaryTolerance = 5e-4;      // three printed decimals
constexpr double kStationarityEpsilon = 1e-15;
constexpr std::size_t kMaxThreshold = 300;
constexpr double kIncrementTarget = 0.0416;
constexpr double kIncrementTolerance = 5e-4;
constexpr double kLineRelativeTolerance = 1e-9;
constexpr double kScalingTolerance = 0.05;         // relative error of the 1/n ratio

struct Verdict {
  bool pass;
  std::string detail;
};

const GrossScalar g = GrossScalar::grossone();

Strategy s_star() {
  return Strategy(parse_rational("0.8"), parse_rational("0.75"), parse_rational("0.2"),
                  parse_rational("0.4"), parse_rational("0.05"));
}
Strategy s_one() {
  return Strategy(parse_rational("0.4"), parse_rational("0.4"), parse_rational("0.1"),
                  parse_rational("0.8"), parse_rational("0.1"));
}
std::vector<Strategy> reference_pair() { return {s_star(), s_one()}; }

std::vector<Strategy> du_trigger_tft() {
  return {Strategy::always_defect(), Strategy::trigger(), Strategy::tit_for_tat()};
}

std::vector<Strategy> all_deterministic() {
  std::vector<Strategy> out;
  for (int code = 0; code < 32; ++code) {
    auto bit = [&](int i) { return Rational((code >> i) & 1); };
    out.emplace_back(bit(0), bit(1), bit(2), bit(3), bit(4));
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

PayoffForm F(Payoff p, long c = 1) { return PayoffForm::of(p, c); }

// 1. Grossone arithmetic identities.
Verdict arithmetic_identities() {
  const std::vector<std::pair<const char*, bool>> checks = {
      {"0*g = 0", GrossScalar(0) * g == GrossScalar(0)},
      {"2g-g = g", GrossScalar(2) * g - g == g},
      {"g^0 = 1", GrossScalar::monomial(1, 0) == GrossScalar(1)},
      {"g*g^-2 = g^-1", g * GrossScalar::monomial(1, -2) == GrossScalar::monomial(1, -1)},
      {"g^-1 > g^-2", GrossScalar::monomial(1, -1) > GrossScalar::monomial(1, -2)},
      {"g^-2 > 0", GrossScalar::monomial(1, -2) > GrossScalar(0)},
      {"parsed 2g-g = g", parse_gross("2g-g") == g},
  };
  std::string failed;
  for (const auto& [name, ok] : checks) {
    if (!ok) failed += std::string(failed.empty() ? "" : ", ") + name;
  }
  return {failed.empty(), failed.empty() ? "7 identities exact" : "failed: " + failed};
}

// 2. Symbolic pair and total expectations.
Verdict symbolic_table() {
  const auto t = det::symbolic_tournament(du_trigger_tft());
  const PayoffForm none;
  const det::AffineForm du_vs{F(Payoff::T) - F(Payoff::P), F(Payoff::P)};
  const det::AffineForm vs_du{F(Payoff::S) - F(Payoff::P), F(Payoff::P)};
  const det::AffineForm mutual{none, F(Payoff::R)};
  const det::AffineForm du_total{F(Payoff::T, 2) - F(Payoff::P, 2), F(Payoff::P, 2)};
  const det::AffineForm other_total{F(Payoff::S) - F(Payoff::P),
                                    F(Payoff::R) + F(Payoff::P)};
  int matched = 0;
  matched += t.pair[0][1] == du_vs;
  matched += t.pair[0][2] == du_vs;
  matched += t.pair[1][0] == vs_du;
  matched += t.pair[2][0] == vs_du;
  matched += t.pair[1][2] == mutual;
  matched += t.pair[2][1] == mutual;
  matched += t.totals[0] == du_total;
  matched += t.totals[1] == other_total;
  matched += t.totals[2] == other_total;
  return {matched == 9, std::to_string(matched) + "/9 forms match; Du total " +
                            format_affine(t.totals[0].intercept, t.totals[0].slope) +
                            ", others " +
                            format_affine(t.totals[1].intercept, t.totals[1].slope)};
}

// 3. Ranking at n = grossone.
Verdict grossone_ranking() {
  const Payoffs payoffs(10, GrossScalar(4) + GrossScalar::monomial(Rational(17, 2), -1), 4,
                        -1);
  const auto r = det::tournament(du_trigger_tft(), payoffs, g);
  if (!r.ranking) return {false, "no ranking"};
  const auto& k = *r.ranking;
  const bool ok = k.size() == 2 && k[0].players == std::vector<std::size_t>{0} &&
                  k[0].value == parse_gross("8g+12") &&
                  k[1].players == std::vector<std::size_t>{1, 2} &&
                  k[1].value == parse_gross("8g+3.5");
  std::string detail;
  for (const auto& group : k) {
    detail += "place " + std::to_string(group.place) + ": " + format_gross(group.value) +
              " x" + std::to_string(group.players.size()) + "; ";
  }
  return {ok, detail};
}

// 4. Interval of R that lets the defector win.
Verdict existence_interval() {
  const OpenInterval r = det::existence_interval_R(10, 4, -1);
  bool ok = r.lower == GrossScalar(4) && r.upper == parse_gross("4+17g^-1") &&
            r.width().classify() == Magnitude::Infinitesimal;
  const Payoffs payoffs(10, r.midpoint(), 4, -1);
  int wins = 0;
  std::vector<GrossScalar> rounds;
  for (long n = 1; n <= 200; ++n) rounds.emplace_back(n);
  rounds.push_back(g);
  for (const auto& n : rounds) {
    const auto t = det::tournament(du_trigger_tft(), payoffs, n);
    wins += t.totals[0].constant() > t.totals[1].constant();
  }
  ok = ok && wins == static_cast<int>(rounds.size());
  return {ok, "(" + format_gross(r.lower) + ", " + format_gross(r.upper) + "), width " +
                  to_string(r.width().classify()) + ", defector ahead in " +
                  std::to_string(wins) + "/201 round counts"};
}

// 5. Chain construction and stationary rows.
Verdict chain_construction() {
  const double printed_star[4][4] = {{0.3, 0.45, 0.1, 0.15},
                                     {0.16, 0.04, 0.64, 0.16},
                                     {0.04, 0.36, 0.06, 0.54},
                                     {0.005, 0.045, 0.095, 0.855}};
  const double printed_one[4][4] = {{0.3, 0.1, 0.45, 0.15},
                                    {0.04, 0.06, 0.36, 0.54},
                                    {0.16, 0.64, 0.04, 0.16},
                                    {0.005, 0.095, 0.045, 0.855}};
  const double row_star[4] = {0.038, 0.106, 0.148, 0.708};
  const double row_one[4] = {0.038, 0.148, 0.106, 0.708};
  const auto a = stoch::to_double(stoch::build_chain(s_star(), s_one()));
  const auto b = stoch::to_double(stoch::build_chain(s_one(), s_star()));
  double matrix_error = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      matrix_error = std::max(matrix_error, std::abs(a.transition[i][j] - printed_star[i][j]));
      matrix_error = std::max(matrix_error, std::abs(b.transition[i][j] - printed_one[i][j]));
    }
  }
  const StationarityOptions options{kStationarityEpsilon, 10000};
  const auto sa = find_stationarity(a.transition, options);
  const auto sb = find_stationarity(b.transition, options);
  double row_error = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      row_error = std::max(row_error, std::abs(sa.limit[i][j] - row_star[j]));
      row_error = std::max(row_error, std::abs(sb.limit[i][j] - row_one[j]));
    }
  }
  const bool ok = matrix_error < kMatrixTolerance && row_error < kStationaryTolerance &&
                  sa.threshold <= kMaxThreshold && sb.threshold <= kMaxThreshold;
  return {ok, "max matrix error " + fmt(matrix_error) + ", max stationary-row error " +
                  fmt(row_error) + ", thresholds " + std::to_string(sa.threshold) + "/" +
                  std::to_string(sb.threshold)};
}

// 6. Structure of G and F.
Verdict line_structure() {
  const auto players = reference_pair();
  const stoch::DeltaLine line = stoch::delta_line(players, 0, 1, {kStationarityEpsilon, 10000});
  const auto& G = line.increment;
  const auto& Fv = line.transient;
  const double gval = G[2].get_d();
  bool ok = G[0] == 0 && G[3] == 0 && G[1] == -G[2] &&
            std::abs(gval - kIncrementTarget) < kIncrementTolerance;
  ok = ok && Fv[0] == 0 && Fv[3] == 0 && Fv[1] == -Fv[2];

  // Oracle: sum the per-round gap vectors directly.
  const auto ca = stoch::build_chain(players[0], players[1]);
  const auto cb = stoch::build_chain(players[1], players[0]);
  Vec4<Rational> va = ca.initial;
  Vec4<Rational> vb = cb.initial;
  Vec4<Rational> sum{0, 0, 0, 0};
  for (std::size_t t = 1; t <= line.threshold; ++t) {
    sum = sum + (va - vb);
    va = vec_mat(va, ca.transition);
    vb = vec_mat(vb, cb.transition);
  }
  ok = ok && sum == Fv && (va - vb) == G;
  return {ok, "G = [0, -g, g, 0] with g = " + fmt(gval) + ", F = [0, -x, x, 0] with x = " +
                  fmt(Fv[2].get_d()) + " (oracle " + (sum == Fv ? "equal" : "differs") +
                  "), threshold " + std::to_string(line.threshold)};
}

// 7. Line against exact expectation gap.
Verdict approximation_quality() {
  const auto players = reference_pair();
  const stoch::DeltaLine line = stoch::delta_line(players, 0, 1, {kStationarityEpsilon, 10000});
  double worst = 0;
  bool ok = true;
  for (std::uint64_t n : {301u, 600u, 3000u}) {
    const PayoffForm approx = stoch::delta_tilde_at(line, GrossScalar(static_cast<long>(n)));
    const Vec4<Rational> exact = stoch::delta_exact(players, 0, 1, n);
    Rational err = 0;
    Rational size = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational a = *approx.coefficients()[k].as_rational();
      err = std::max<Rational>(err, abs(a - exact[k]));
      size = std::max<Rational>(size, abs(exact[k]));
    }
    const double rel = Rational(err / size).get_d();
    worst = std::max(worst, rel);
    ok = ok && rel < kLineRelativeTolerance;
  }
  return {ok, "worst relative error " + fmt(worst) + " over n = 301, 600, 3000"};
}

// 8. Closed form against round-by-round play.
Verdict deterministic_oracle() {
  const auto all = all_deterministic();
  long mismatches = 0;
  long comparisons = 0;
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto e = det::pair_expectation(a, b);
      for (std::uint64_t n = 1; n <= 200; ++n) {
        ++comparisons;
        if (!(e.at(n) == det::simulate_rounds(a, b, n))) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(comparisons) + " comparisons, " +
                               std::to_string(mismatches) + " mismatches"};
}

// 9. Deterministic strategies through the stochastic engine.
Verdict cross_engine() {
  const auto players = all_deterministic();
  int equal = 0;
  for (long n : {1L, 10L, 100L}) {
    const auto d = det::tournament(players, Payoffs::symbolic(), n);
    const auto s = stoch::tournament(players, Payoffs::symbolic(), n);
    equal += d.totals == s.totals;
  }
  return {equal == 3, "32-player totals equal at " + std::to_string(equal) +
                          "/3 round counts (n = 1, 10, 100)"};
}

// 10. Solver soundness at n = 100 and n = grossone.
Verdict solver_soundness() {
  const auto players = reference_pair();
  bool ok = true;
  std::string detail;
  for (const GrossScalar& n : {GrossScalar(100), g}) {
    const solver::ModelSpec spec{20, n};
    const auto sol =
        solver::solve_model(players, spec, {}, {kStationarityEpsilon, 10000});
    const bool mid = solver::validate_solution(sol.set.sample(Rational(1, 2)), sol.line, spec)
                         .passed();
    const bool lo = solver::validate_solution(sol.set.sample(0), sol.line, spec).passed();
    const bool hi = solver::validate_solution(sol.set.sample(1), sol.line, spec).passed();
    ok = ok && mid && !lo && !hi;
    detail += "n = " + format_gross(n) + ": midpoint " + (mid ? "passes" : "fails") +
              ", endpoints " + (!lo && !hi ? "fail" : "pass") + "; ";
    if (n == g) {
      const std::size_t t = index(Payoff::T);
      const GrossScalar expected =
          GrossScalar(20) / (GrossScalar(sol.gammas.mu[t]) * g +
                             GrossScalar(sol.gammas.lambda[t]));
      ok = ok && sol.set.width == expected &&
           sol.set.width_class == Magnitude::Infinitesimal;
      detail += std::string("width ") + to_string(sol.set.width_class) +
                (sol.set.width == expected ? ", equal to tau/(mu_T g + lambda_T)"
                                           : ", NOT equal to tau/(mu_T g + lambda_T)");
    }
  }
  return {ok, detail};
}

// 11. Width does not depend on the non-pivot parameters.
Verdict width_invariance() {
  const auto players = reference_pair();
  bool ok = true;
  std::string detail;
  for (const GrossScalar& n : {GrossScalar(100), g}) {
    const solver::ModelSpec spec{20, n};
    std::optional<GrossScalar> width;
    int same = 0;
    for (int k = 0; k < 10; ++k) {
      solver::ShiftParams shifts;
      shifts.S = GrossScalar(Rational(k - 4, 3));
      shifts.delta_R = GrossScalar(Rational(k + 1, 2));
      shifts.delta_P = GrossScalar(Rational(1, k + 2));
      const auto sol =
          solver::solve_model(players, spec, shifts, {kStationarityEpsilon, 10000});
      if (!width) width = sol.set.width;
      same += sol.set.width == *width;
    }
    ok = ok && same == 10;
    detail += "n = " + format_gross(n) + ": " + std::to_string(same) + "/10 identical; ";
  }
  return {ok, detail};
}

// 12. Finite-n widths shrink like 1/n.
Verdict classical_limit() {
  const auto players = reference_pair();
  std::vector<double> width;
  for (long n : {100L, 1000L, 10000L}) {
    const solver::ModelSpec spec{20, n};
    const auto sol = solver::solve_model(players, spec, {}, {kStationarityEpsilon, 10000});
    if (sol.gammas.gamma1 != 0) return {false, "gamma1 != 0 at n = " + std::to_string(n)};
    width.push_back(sol.set.width.as_rational()->get_d());
  }
  const double r1 = width[0] / width[1];
  const double r2 = width[1] / width[2];
  const double e1 = std::abs(r1 / 10 - 1);
  const double e2 = std::abs(r2 / 10 - 1);
  const auto at_g =
      solver::solve_model(players, {20, g}, {}, {kStationarityEpsilon, 10000}).set;
  const bool ok = e1 < kScalingTolerance && e2 < kScalingTolerance &&
                  at_g.width_class == Magnitude::Infinitesimal;
  return {ok, "widths " + fmt(width[0]) + ", " + fmt(width[1]) + ", " + fmt(width[2]) +
                  "; ratios " + fmt(r1) + " (error " + fmt(e1) + "), " + fmt(r2) +
                  " (error " + fmt(e2) + "); width at n = g " +
                  to_string(at_g.width_class)};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Verdict()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "arithmetic identities", arithmetic_identities},
      {2, "symbolic expectation table", symbolic_table},
      {3, "ranking at n = g", grossone_ranking},
      {4, "existence interval for R", existence_interval},
      {5, "chain construction and stationary rows", chain_construction},
      {6, "structure of F and G", line_structure},
      {7, "approximation quality", approximation_quality},
      {8, "deterministic oracle equivalence", deterministic_oracle},
      {9, "cross-engine equivalence", cross_engine},
      {10, "solver soundness", solver_soundness},
      {11, "width invariance", width_invariance},
      {12, "classical-limit scaling", classical_limit},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && v.pass;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << ": "
              << v.detail << "\n";
  }
  return all_pass ? 0 : 1;
}
