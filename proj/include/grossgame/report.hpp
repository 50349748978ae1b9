#pragma once

// Runs a configuration and renders its results twice: as a JSON report (every
// number a gross-literal that parses back to the same value) and as console
// tables.

#include <string>

#include "grossgame/config.hpp"
#include "grossgame/det_engine.hpp"
#include "grossgame/solver.hpp"
#include "grossgame/stoch_engine.hpp"
#include "json.hpp"

namespace grossgame {

using Report = nlohmann::ordered_json;

struct RunOutput {
  Report report;        // without timings
  std::string console;  // human-readable tables
};

// Dispatches on config.mode. Library errors propagate to the caller.
RunOutput run(const TournamentConfig& config);

// Report skeleton for a run that stopped with an analysis failure.
Report failure_report(const TournamentConfig& config, const std::exception& error);

// Serialized report, newline-terminated.
std::string dump_report(const Report& report);

// Building blocks, exposed for tests.
Report form_json(const PayoffForm& form);
Report line_json(const stoch::DeltaLine& line);
Report solution_json(const solver::SolutionSet& set);

}  // namespace grossgame
