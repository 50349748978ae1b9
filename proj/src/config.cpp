#include "grossgame/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "grossgame/literal.hpp"

namespace grossgame {
namespace {

using json = nlohmann::json;

constexpr std::array<Payoff, 4> kPayoffOrder = {Payoff::T, Payoff::R, Payoff::P,
                                                Payoff::S};

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("field '" + field + "': " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

GrossScalar read_gross(const json& value, const std::string& field) {
  try {
    if (value.is_number_integer()) return GrossScalar(value.get<long>());
    if (value.is_number()) return GrossScalar(rational_from_double(value.get<double>()));
    if (value.is_string()) return parse_gross(value.get<std::string>());
  } catch (const Error& e) {
    fail(field, e.what());
  }
  fail(field, "expected a number or a gross-literal string");
}

Rational read_rational(const json& value, const std::string& field) {
  try {
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_number()) return rational_from_double(value.get<double>());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    fail(field, e.what());
  }
  fail(field, "expected a number or a rational string");
}

std::size_t read_index(const json& value, const std::string& field) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    fail(field, "expected a nonnegative integer");
  }
  return value.get<std::size_t>();
}

Strategy read_strategy(const json& value, const std::string& field) {
  if (value.is_string()) {
    if (auto s = Strategy::named(value.get<std::string>())) return *s;
    fail(field, "unknown strategy name '" + value.get<std::string>() +
                    "' (known: Du, TRIGGER, TFT, STFT)");
  }
  if (!value.is_array() || value.size() != 5) {
    fail(field, "expected a strategy name or [y, p1, p2, p3, p4]");
  }
  std::array<Rational, 5> p;
  for (std::size_t i = 0; i < 5; ++i) {
    p[i] = read_rational(value[i], field + "[" + std::to_string(i) + "]");
  }
  try {
    return Strategy(p[0], p[1], p[2], p[3], p[4]);
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

void check_keys(const json& object, const std::string& field,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : object.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) {
      fail(field.empty() ? item.key() : field + "." + item.key(), "unknown field");
    }
  }
}

Payoffs read_payoffs(const json& value) {
  if (!value.is_object()) fail("payoffs", "expected an object with T, R, P, S");
  check_keys(value, "payoffs", {"T", "R", "P", "S"});
  Payoffs payoffs;
  for (Payoff p : kPayoffOrder) {
    const std::string key(1, symbol(p));
    if (!value.contains(key)) continue;
    const json& v = value.at(key);
    if (v.is_string() && v.get<std::string>() == key) continue;  // symbolic
    payoffs[p] = read_gross(v, "payoffs." + key);
  }
  if (payoffs.concrete() && !payoffs.satisfies_fundamental_law()) {
    fail("payoffs", "concrete payoffs must satisfy T > R > P > S");
  }
  return payoffs;
}

std::string gross_json(const GrossScalar& x) { return format_gross(x); }

}  // namespace

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Det:
      return "det";
    case Mode::Stoch:
      return "stoch";
    case Mode::Solve:
      return "solve";
    case Mode::Eval:
      return "eval";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
  for (Mode m : {Mode::Det, Mode::Stoch, Mode::Solve, Mode::Eval}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<Strategy> TournamentConfig::strategies() const {
  std::vector<Strategy> out;
  out.reserve(players.size());
  for (const auto& p : players) out.push_back(p.strategy);
  return out;
}

TournamentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("syntax error at " + line_column(text, e.byte - 1) + ": " +
                      e.what());
  }
  if (!doc.is_object()) throw ConfigError("the configuration must be an object");
  check_keys(doc, "",
             {"mode", "players", "payoffs", "n", "tau", "epsilon", "nmax", "target",
              "rival", "S", "shifts", "expression", "tool", "version"});

  TournamentConfig config;
  if (doc.contains("mode")) {
    const json& m = doc["mode"];
    auto mode = m.is_string() ? parse_mode(m.get<std::string>()) : std::nullopt;
    if (!mode) fail("mode", "expected one of det, stoch, solve, eval");
    config.mode = *mode;
  }
  if (doc.contains("expression")) {
    if (!doc["expression"].is_string()) fail("expression", "expected a string");
    config.expression = doc["expression"].get<std::string>();
  }
  if (config.mode == Mode::Eval && config.expression.empty()) {
    fail("expression", "required in eval mode");
  }

  if (doc.contains("players")) {
    const json& players = doc["players"];
    if (!players.is_array()) fail("players", "expected a list");
    for (std::size_t i = 0; i < players.size(); ++i) {
      const std::string field = "players[" + std::to_string(i) + "]";
      const json& entry = players[i];
      if (!entry.is_object()) fail(field, "expected {\"name\", \"strategy\"}");
      check_keys(entry, field, {"name", "strategy"});
      if (!entry.contains("strategy")) fail(field + ".strategy", "missing");
      Strategy s = read_strategy(entry["strategy"], field + ".strategy");
      std::string name = "P" + std::to_string(i + 1);
      if (entry.contains("name")) {
        if (!entry["name"].is_string()) fail(field + ".name", "expected a string");
        name = entry["name"].get<std::string>();
      }
      config.players.push_back({std::move(name), std::move(s)});
    }
  }
  if (config.mode != Mode::Eval && config.players.size() < 2) {
    fail("players", "at least two players are required");
  }

  if (doc.contains("payoffs")) config.payoffs = read_payoffs(doc["payoffs"]);
  if (doc.contains("n")) config.n = read_gross(doc["n"], "n");
  if (!(config.n >= GrossScalar(1))) fail("n", "must be at least 1");
  if (doc.contains("tau")) {
    config.tau = read_gross(doc["tau"], "tau");
    if (config.tau->sign() <= 0) fail("tau", "must be positive");
  }
  if (config.mode == Mode::Solve && !config.tau) fail("tau", "required in solve mode");

  if (doc.contains("epsilon")) {
    const json& e = doc["epsilon"];
    if (!e.is_number() || !(e.get<double>() > 0)) {
      fail("epsilon", "expected a positive number");
    }
    config.stationarity.epsilon = e.get<double>();
  }
  if (doc.contains("nmax")) {
    config.stationarity.max_power = read_index(doc["nmax"], "nmax");
    if (config.stationarity.max_power == 0) fail("nmax", "must be positive");
  }

  if (doc.contains("target")) config.target = read_index(doc["target"], "target");
  if (doc.contains("rival")) config.rival = read_index(doc["rival"], "rival");
  if (config.mode != Mode::Eval) {
    if (config.target >= config.players.size()) fail("target", "out of range");
    if (config.rival &&
        (*config.rival >= config.players.size() || *config.rival == config.target)) {
      fail("rival", "must be a player index other than target");
    }
  }

  if (doc.contains("S")) config.shifts.S = read_gross(doc["S"], "S");
  if (doc.contains("shifts")) {
    const json& shifts = doc["shifts"];
    if (!shifts.is_object()) fail("shifts", "expected an object with T, R, P");
    check_keys(shifts, "shifts", {"T", "R", "P"});
    for (Payoff p : {Payoff::T, Payoff::R, Payoff::P}) {
      const std::string key(1, symbol(p));
      if (!shifts.contains(key)) continue;
      GrossScalar d = read_gross(shifts[key], "shifts." + key);
      if (d.sign() <= 0) fail("shifts." + key, "shifts must be positive");
      config.shifts.shift(p) = std::move(d);
    }
  }
  return config;
}

TournamentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

nlohmann::ordered_json to_json(const TournamentConfig& config) {
  nlohmann::ordered_json out;
  out["mode"] = to_string(config.mode);
  if (config.mode == Mode::Eval) {
    out["expression"] = config.expression;
    return out;
  }
  out["players"] = nlohmann::ordered_json::array();
  for (const auto& p : config.players) {
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const auto& x : p.strategy.params()) params.push_back(format_rational(x));
    out["players"].push_back({{"name", p.name}, {"strategy", params}});
  }
  nlohmann::ordered_json payoffs = nlohmann::ordered_json::object();
  for (Payoff p : kPayoffOrder) {
    const std::string key(1, symbol(p));
    payoffs[key] = config.payoffs[p] ? gross_json(*config.payoffs[p]) : key;
  }
  out["payoffs"] = payoffs;
  out["n"] = gross_json(config.n);
  if (config.tau) out["tau"] = gross_json(*config.tau);
  out["epsilon"] = config.stationarity.epsilon;
  out["nmax"] = config.stationarity.max_power;
  out["target"] = config.target;
  if (config.rival) out["rival"] = *config.rival;
  if (config.shifts.S) out["S"] = gross_json(*config.shifts.S);
  nlohmann::ordered_json shifts = nlohmann::ordered_json::object();
  for (Payoff p : {Payoff::T, Payoff::R, Payoff::P}) {
    if (const auto& d = config.shifts.shift(p)) {
      shifts[std::string(1, symbol(p))] = gross_json(*d);
    }
  }
  if (!shifts.empty()) out["shifts"] = shifts;
  return out;
}

}  // namespace grossgame
