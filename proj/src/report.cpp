#include "grossgame/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "grossgame/literal.hpp"

namespace grossgame {
namespace {

constexpr std::array<Payoff, 4> kDisplayOrder = {Payoff::T, Payoff::R, Payoff::P,
                                                 Payoff::S};

std::string lit(const GrossScalar& x) { return format_gross(x); }

// Rounds a rational to six significant digits; short exact values stay exact.
Rational rounded(const Rational& q) {
  if (format_rational(q).size() <= 10) return q;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", q.get_d());
  return parse_rational(buffer);
}

GrossPolynomial rounded(const GrossPolynomial& p) {
  std::vector<GrossTerm> terms;
  for (const auto& t : p.terms()) terms.push_back({rounded(t.coeff), t.power});
  return GrossPolynomial::normalize(std::move(terms));
}

// Console rendering of a possibly very long exact value.
std::string approx(const GrossScalar& x) {
  if (x.is_polynomial()) return format_polynomial(rounded(x.numerator()));
  return "(" + format_polynomial(rounded(x.numerator())) + ")/(" +
         format_polynomial(rounded(x.denominator())) + ")";
}

std::string approx_form(const PayoffForm& form) {
  Vec4<GrossScalar> c;
  for (std::size_t k = 0; k < 4; ++k) {
    const GrossScalar& x = form.coefficients()[k];
    c[k] = x.is_polynomial() ? GrossScalar(rounded(x.numerator())) : x;
  }
  const GrossScalar& k = form.constant();
  return format_form(
      PayoffForm(c, k.is_polynomial() ? GrossScalar(rounded(k.numerator())) : k));
}

std::string approx_vector(const Vec4<Rational>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += ", ";
    out += format_rational(rounded(v[k]));
  }
  return out + "]";
}

Report vector_json(const Vec4<Rational>& v) {
  Report out = Report::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Report interval_json(const OpenInterval& i) {
  return {{"lower", lit(i.lower)}, {"upper", lit(i.upper)}, {"width", lit(i.width())}};
}

Report payoffs_json(const Payoffs& payoffs) {
  Report out = Report::object();
  for (Payoff p : kDisplayOrder) {
    const std::string key(1, symbol(p));
    out[key] = payoffs[p] ? lit(*payoffs[p]) : key;
  }
  return out;
}

Report ranking_json(const std::vector<RankGroup>& ranking,
                    const TournamentConfig& config) {
  Report out = Report::array();
  for (const auto& group : ranking) {
    for (std::size_t k : group.players) {
      out.push_back({{"place", group.place},
                     {"player", config.players[k].name},
                     {"index", k},
                     {"value", lit(group.value)},
                     {"ex_aequo", group.players.size() > 1}});
    }
  }
  return out;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 3, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << "  " << line << "\n";
  }
  return out.str();
}

// Player-by-opponent table with a total column.
std::string pair_table(const TournamentConfig& config,
                       const std::vector<std::vector<std::string>>& cells,
                       const std::vector<std::string>& totals) {
  const std::size_t m = config.players.size();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (const auto& p : config.players) header.push_back(p.name);
  header.push_back("Total");
  rows.push_back(header);
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::string> row{config.players[k].name};
    for (std::size_t j = 0; j < m; ++j) row.push_back(k == j ? "-" : cells[k][j]);
    row.push_back(totals[k]);
    rows.push_back(std::move(row));
  }
  return render_table(rows);
}

std::string ranking_table(const TournamentConfig& config,
                          const std::vector<RankGroup>& ranking, bool exact) {
  std::vector<std::vector<std::string>> rows{{"Place", "Player", "Expectation", ""}};
  for (const auto& group : ranking) {
    for (std::size_t k : group.players) {
      rows.push_back({std::to_string(group.place), config.players[k].name,
                      exact ? lit(group.value) : approx(group.value),
                      group.players.size() > 1 ? "ex aequo" : ""});
    }
  }
  return render_table(rows);
}

Report base_report(const TournamentConfig& config) {
  Report out;
  out["tool"] = "grossgame";
  out["version"] = kVersion;
  out["mode"] = to_string(config.mode);
  out["input"] = to_json(config);
  out["stationarity"] = {{"epsilon", config.stationarity.epsilon},
                         {"nmax", config.stationarity.max_power}};
  return out;
}

RunOutput run_eval(const TournamentConfig& config) {
  const GrossScalar value = parse_gross(config.expression);
  RunOutput out;
  out.report = base_report(config);
  out.report["result"] = {{"value", lit(value)},
                          {"magnitude", to_string(value.classify())}};
  out.console = lit(value) + "\n";
  return out;
}

RunOutput run_det(const TournamentConfig& config) {
  const auto players = config.strategies();
  const std::size_t m = players.size();
  const auto table = det::symbolic_tournament(players);
  const auto result = det::tournament(players, config.payoffs, config.n);

  RunOutput out;
  out.report = base_report(config);
  std::ostringstream console;

  std::vector<std::vector<std::string>> sym(m, std::vector<std::string>(m));
  std::vector<std::string> sym_totals(m);
  Report symbolic = Report::array();
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (k == j) continue;
      const auto& f = table.pair[k][j];
      sym[k][j] = format_affine(f.intercept, f.slope);
      symbolic.push_back({{"player", k},
                          {"opponent", j},
                          {"intercept", form_json(f.intercept)},
                          {"slope", form_json(f.slope)},
                          {"text", sym[k][j]}});
    }
    sym_totals[k] = format_affine(table.totals[k].intercept, table.totals[k].slope);
  }
  Report symbolic_totals = Report::array();
  for (std::size_t k = 0; k < m; ++k) {
    symbolic_totals.push_back({{"player", k},
                               {"intercept", form_json(table.totals[k].intercept)},
                               {"slope", form_json(table.totals[k].slope)},
                               {"text", sym_totals[k]}});
  }
  out.report["symbolic"] = {{"pairs", symbolic}, {"totals", symbolic_totals}};
  console << "Expectations after n rounds (n a multiple of every cycle length)\n"
          << pair_table(config, sym, sym_totals) << "\n";

  std::vector<std::vector<std::string>> cells(m, std::vector<std::string>(m));
  std::vector<std::string> totals(m);
  Report pairs = Report::array();
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (k == j) continue;
      cells[k][j] = format_form(result.pair[k][j]);
      pairs.push_back({{"player", k},
                       {"opponent", j},
                       {"expectation", form_json(result.pair[k][j])}});
    }
    totals[k] = format_form(result.totals[k]);
  }
  Report totals_json = Report::array();
  for (std::size_t k = 0; k < m; ++k) {
    totals_json.push_back({{"player", k}, {"expectation", form_json(result.totals[k])}});
  }
  out.report["pairs"] = pairs;
  out.report["totals"] = totals_json;
  console << "Expectations at n = " << lit(config.n) << "\n"
          << pair_table(config, cells, totals);
  if (result.ranking) {
    out.report["ranking"] = ranking_json(*result.ranking, config);
    console << "\nRanking at n = " << lit(config.n) << "\n"
            << ranking_table(config, *result.ranking, true);
  }
  out.console = console.str();
  return out;
}

RunOutput run_stoch(const TournamentConfig& config) {
  const auto players = config.strategies();
  const std::size_t m = players.size();
  const auto result =
      stoch::tournament(players, config.payoffs, config.n, config.stationarity);
  const auto rounds = stoch::finite_rounds(config.n);

  RunOutput out;
  out.report = base_report(config);
  std::ostringstream console;
  std::vector<std::vector<std::string>> cells(m, std::vector<std::string>(m));
  std::vector<std::string> totals(m);
  Report pairs = Report::array();
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      if (k == j) continue;
      const auto chain = stoch::build_chain(players[k], players[j]);
      PayoffForm form;
      if (rounds) {
        form = PayoffForm::from_weights(stoch::visit_sum(chain, *rounds).total);
      } else {
        const auto s = stoch::visit_sum(chain, *result.threshold);
        form = PayoffForm::from_weights(s.total) +
               PayoffForm::from_weights(s.next) *
                   (config.n - GrossScalar(static_cast<long>(*result.threshold)));
      }
      form = form.substitute(config.payoffs);
      cells[k][j] = approx_form(form);
      pairs.push_back({{"player", k}, {"opponent", j}, {"expectation", form_json(form)}});
    }
    totals[k] = approx_form(result.totals[k]);
  }
  Report totals_json = Report::array();
  for (std::size_t k = 0; k < m; ++k) {
    totals_json.push_back({{"player", k}, {"expectation", form_json(result.totals[k])}});
  }
  out.report["exact"] = rounds.has_value();
  if (result.threshold) out.report["threshold"] = *result.threshold;
  out.report["pairs"] = pairs;
  out.report["totals"] = totals_json;
  console << "Expected payoffs at n = " << lit(config.n)
          << (rounds ? " (exact)" : " (stationary line, threshold " +
                                        std::to_string(*result.threshold) + ")")
          << "\n"
          << pair_table(config, cells, totals);
  if (result.ranking) {
    out.report["ranking"] = ranking_json(*result.ranking, config);
    console << "\nRanking at n = " << lit(config.n) << "\n"
            << ranking_table(config, *result.ranking, false);
  }
  out.console = console.str();
  return out;
}

Report validation_json(const Payoffs& sample, const solver::ValidationReport& v) {
  return {{"payoffs", payoffs_json(sample)},
          {"delta", lit(v.delta)},
          {"fundamental_law", v.fundamental_law()},
          {"positive", v.positive},
          {"below_tau", v.below_tau},
          {"passed", v.passed()}};
}

RunOutput run_solve(const TournamentConfig& config) {
  const auto players = config.strategies();
  const solver::ModelSpec spec(*config.tau, config.n, config.target, config.rival);
  const auto solution = solver::solve_model(players, spec, config.shifts,
                                            config.stationarity);
  const auto& set = solution.set;
  const auto& g = solution.gammas;

  RunOutput out;
  out.report = base_report(config);
  out.report["target"] = {{"index", config.target},
                          {"name", config.players[config.target].name}};
  out.report["rival"] = {{"index", solution.rival.index},
                         {"name", config.players[solution.rival.index].name},
                         {"tie", solution.rival.tie}};
  Report line = line_json(solution.line);
  line["exact"] = solution.exact;
  out.report["line"] = line;
  out.report["gammas"] = {{"gamma1", format_rational(g.gamma1)},
                          {"gamma2", format_rational(g.gamma2)},
                          {"lambda", vector_json(g.lambda)},
                          {"mu", vector_json(g.mu)}};
  out.report["solution"] = solution_json(set);

  Report validation;
  const std::pair<const char*, Rational> probes[] = {
      {"midpoint", Rational(1, 2)}, {"lower_endpoint", 0}, {"upper_endpoint", 1}};
  std::vector<std::pair<std::string, solver::ValidationReport>> checks;
  for (const auto& [name, fraction] : probes) {
    const Payoffs sample = set.sample(fraction);
    const auto v = solver::validate_solution(sample, solution.line, spec);
    validation[name] = validation_json(sample, v);
    checks.emplace_back(name, v);
  }
  out.report["validation"] = validation;

  std::ostringstream console;
  const std::string target = config.players[config.target].name;
  const std::string rival = config.players[solution.rival.index].name;
  console << "Model: 0 < Delta(" << target << ", " << rival << ", n) < "
          << lit(*config.tau) << " at n = " << lit(config.n) << "\n";
  if (solution.rival.tie) console << "  (rival tied with another player; lowest index kept)\n";
  console << "  "
          << (solution.exact ? "exact line through n, threshold "
                             : "stationary line, threshold ")
          << solution.line.threshold << "\n"
          << "  F     = " << approx_vector(solution.line.transient) << "\n"
          << "  G     = " << approx_vector(solution.line.increment) << "\n"
          << "  alpha = " << approx_form(solution.line.alpha()) << "\n"
          << "  beta  = " << approx_form(solution.line.beta()) << "\n"
          << "  gamma1 = " << format_rational(rounded(g.gamma1))
          << ", gamma2 = " << format_rational(rounded(g.gamma2)) << "\n\n";

  const std::string pivot(1, symbol(set.pivot));
  std::vector<std::vector<std::string>> rows{{"Quantity", "Lower", "Upper"}};
  const std::string moved = set.kind == solver::SolutionCase::Gamma1NonZero
                                ? "S"
                                : "shift of " + pivot;
  rows.push_back({moved, approx(set.shift_interval.lower),
                  approx(set.shift_interval.upper)});
  if (set.kind == solver::SolutionCase::Gamma1NonZero) {
    for (Payoff p : {Payoff::T, Payoff::R, Payoff::P}) {
      const auto r = set.range(p);
      rows.push_back({std::string(1, symbol(p)), approx(r->lower), approx(r->upper)});
    }
  } else {
    rows.push_back({pivot, approx(set.pivot_interval.lower),
                    approx(set.pivot_interval.upper)});
  }
  console << "Solution (" << solver::to_string(set.kind) << ")\n"
          << render_table(rows) << "  width " << approx(set.width) << " ("
          << to_string(set.width_class) << ")\n";
  if (set.S) console << "  S fixed at " << lit(*set.S) << "\n";
  for (Payoff p : {Payoff::T, Payoff::R, Payoff::P}) {
    if (set.kind == solver::SolutionCase::Gamma1Zero && p == set.pivot) continue;
    const auto& d = set.shifts.shift(p);
    console << "  shift of " << symbol(p) << ": "
            << (d ? lit(*d) : std::string("free (T > R > P > S)")) << "\n";
  }
  console << "  fundamental law " << (set.law_compatible ? "attainable" : "violated")
          << "\n\nValidation\n";
  for (const auto& [name, v] : checks) {
    console << "  " << name << ": Delta = " << approx(v.delta) << " -> "
            << (v.passed() ? "inside" : "outside") << " the model\n";
  }
  out.console = console.str();
  return out;
}

}  // namespace

Report form_json(const PayoffForm& form) {
  Report out = Report::object();
  for (Payoff p : kDisplayOrder) out[std::string(1, symbol(p))] = lit(form.coefficient(p));
  out["const"] = lit(form.constant());
  return out;
}

Report line_json(const stoch::DeltaLine& line) {
  return {{"threshold", line.threshold},
          {"F", vector_json(line.transient)},
          {"G", vector_json(line.increment)},
          {"alpha", form_json(line.alpha())},
          {"beta", form_json(line.beta())}};
}

Report solution_json(const solver::SolutionSet& set) {
  Report out;
  out["case"] = solver::to_string(set.kind);
  out["pivot"] = std::string(1, symbol(set.pivot));
  out["shift_interval"] = interval_json(set.shift_interval);
  out["pivot_interval"] = interval_json(set.pivot_interval);
  out["width"] = lit(set.width);
  out["width_class"] = to_string(set.width_class);
  if (set.S) out["S"] = lit(*set.S);
  Report shifts = Report::object();
  for (Payoff p : {Payoff::T, Payoff::R, Payoff::P}) {
    const auto& d = set.shifts.shift(p);
    shifts[std::string(1, symbol(p))] = d ? Report(lit(*d)) : Report(nullptr);
  }
  out["shifts"] = shifts;
  out["law_compatible"] = set.law_compatible;
  out["admissible"] = set.admissible ? interval_json(*set.admissible) : Report(nullptr);
  return out;
}

RunOutput run(const TournamentConfig& config) {
  switch (config.mode) {
    case Mode::Eval:
      return run_eval(config);
    case Mode::Det:
      return run_det(config);
    case Mode::Stoch:
      return run_stoch(config);
    case Mode::Solve:
      return run_solve(config);
  }
  throw Error("unknown mode");
}

Report failure_report(const TournamentConfig& config, const std::exception& error) {
  Report out = base_report(config);
  std::string kind = "Error";
  if (dynamic_cast<const NotConverged*>(&error)) kind = "NotConverged";
  else if (dynamic_cast<const BelowStationarity*>(&error)) kind = "BelowStationarity";
  else if (dynamic_cast<const DegenerateBeta*>(&error)) kind = "DegenerateBeta";
  else if (dynamic_cast<const EmptySolution*>(&error)) kind = "EmptySolution";
  else if (dynamic_cast<const NoPivot*>(&error)) kind = "NoPivot";
  out["error"] = {{"kind", kind}, {"message", error.what()}};
  return out;
}

std::string dump_report(const Report& report) { return report.dump(2) + "\n"; }

}  // namespace grossgame
