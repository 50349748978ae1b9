#pragma once

// Run configuration: one JSON document.
//
//   {
//     "mode": "det" | "stoch" | "solve" | "eval",
//     "players": [ {"name": "Du", "strategy": "Du"},
//                  {"name": "S1", "strategy": [0.4, 0.4, 0.1, 0.8, 0.1]} ],
//     "payoffs": {"T": 10, "R": "4+17/2g^-1", "P": 4, "S": -1},
//     "n": "g",
//     "tau": 20,
//     "epsilon": 1e-15, "nmax": 10000,
//     "target": 0, "rival": 1,
//     "S": 0, "shifts": {"T": "...", "R": "...", "P": "..."},
//     "expression": "2g-g"
//   }
//
// Every number may be given as a JSON number or as a gross-literal string. A
// payoff given as its own symbol ("R": "R") or left out stays symbolic.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grossgame/errors.hpp"
#include "grossgame/linalg.hpp"
#include "grossgame/payoffs.hpp"
#include "grossgame/solver.hpp"
#include "grossgame/strategy.hpp"
#include "json.hpp"

namespace grossgame {

inline constexpr const char* kVersion = "1.0.0";

enum class Mode { Det, Stoch, Solve, Eval };

const char* to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

// Invalid configuration; names the offending field or input line.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct PlayerConfig {
  std::string name;
  Strategy strategy;
};

struct TournamentConfig {
  Mode mode = Mode::Det;
  std::vector<PlayerConfig> players;
  Payoffs payoffs;
  GrossScalar n = 1;
  std::optional<GrossScalar> tau;
  StationarityOptions stationarity;
  std::size_t target = 0;
  std::optional<std::size_t> rival;
  solver::ShiftParams shifts;
  std::string expression;

  std::vector<Strategy> strategies() const;
};

// Throws ConfigError with line/column for syntax errors and the field path
// for invalid values.
TournamentConfig parse_config(std::string_view text);
TournamentConfig load_config(const std::string& path);

// Normalized echo that parse_config reads back to an equal configuration.
nlohmann::ordered_json to_json(const TournamentConfig& config);

}  // namespace grossgame
