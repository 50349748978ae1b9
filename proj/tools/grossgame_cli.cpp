// grossgame: command-line front end for the tournament engines and the payoff
// solver.
//
//   grossgame eval "2g-g"
//   grossgame det    config.json [--report out.json]
//   grossgame stoch  config.json [--report out.json] [--epsilon 1e-15] [--nmax 10000]
//   grossgame solve  config.json [--report out.json]
//   grossgame run    config.json            (mode taken from the file)
//
// Exit codes: 0 success, 1 invalid input, 2 analysis failure (no solution,
// degenerate line, chain not stationary); a report is written in case 2 too.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "grossgame/config.hpp"
#include "grossgame/literal.hpp"
#include "grossgame/report.hpp"

namespace {

using namespace grossgame;

struct Options {
  std::string config_path;
  std::string report_path;
  std::optional<double> epsilon;
  std::optional<std::size_t> nmax;
};

bool write_report(const Report& report, const std::string& path) {
  if (path.empty()) return true;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write report to '" << path << "'\n";
    return false;
  }
  out << dump_report(report);
  return static_cast<bool>(out);
}

int execute(const Options& options, std::optional<Mode> mode) {
  TournamentConfig config;
  try {
    config = load_config(options.config_path);
    if (mode) config.mode = *mode;
    if (options.epsilon) {
      if (!(*options.epsilon > 0)) throw ConfigError("--epsilon must be positive");
      config.stationarity.epsilon = *options.epsilon;
    }
    if (options.nmax) {
      if (*options.nmax == 0) throw ConfigError("--nmax must be positive");
      config.stationarity.max_power = *options.nmax;
    }
    if (config.mode == Mode::Solve && !config.tau) {
      throw ConfigError("field 'tau': required in solve mode");
    }
    if (config.mode == Mode::Eval && config.expression.empty()) {
      throw ConfigError("field 'expression': required in eval mode");
    }
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    RunOutput output = run(config);
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    output.report["timings"] = {{"total_ms", elapsed.count()}};
    std::cout << output.console;
    return write_report(output.report, options.report_path) ? 0 : 1;
  } catch (const AnalysisFailure& e) {
    std::cerr << "analysis failure: " << e.what() << "\n";
    write_report(failure_report(config, e), options.report_path);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prisoner's dilemma tournaments over grossone-based numerals"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string expression;
  auto* eval = app.add_subcommand("eval", "Evaluate a gross-number expression");
  eval->add_option("expression", expression, "Expression such as \"2g-g\"")->required();

  Options options;
  auto add_config_command = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("config", options.config_path, "JSON configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--report", options.report_path, "Write the JSON report here");
    cmd->add_option("--epsilon", options.epsilon, "Stationarity tolerance");
    cmd->add_option("--nmax", options.nmax, "Largest matrix power tried");
    return cmd;
  };
  auto* det = add_config_command("det", "Deterministic tournament");
  auto* stoch = add_config_command("stoch", "Stochastic tournament");
  auto* solve = add_config_command("solve", "Solve the payoff design model");
  auto* run_cmd = add_config_command("run", "Run the mode named in the configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (eval->parsed()) {
    try {
      std::cout << format_gross(parse_gross(expression)) << "\n";
      return 0;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  if (det->parsed()) return execute(options, Mode::Det);
  if (stoch->parsed()) return execute(options, Mode::Stoch);
  if (solve->parsed()) return execute(options, Mode::Solve);
  if (run_cmd->parsed()) return execute(options, std::nullopt);
  return 1;
}
