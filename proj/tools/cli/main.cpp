#include <cstdlib>
#include <iostream>

#include "common.hpp"

int main(int argc, char** argv) {
  cli::GlobalOptions options;
  if (const char* env = std::getenv("ELECTRA_JOBS")) {
    try {
      options.jobs = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << cli::json{{"error", "usage"}, {"message", "ELECTRA_JOBS is not an integer"}}.dump() << '\n';
      return 2;
    }
  }

  CLI::App app{"Election analysis toolkit: parsing, similarity measures, maps of elections, restricted domains and voting rules."};
  app.name("electra");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", options.seed, "Random seed");
  auto* json_flag = app.add_flag("--json", options.json, "Emit JSON");
  auto* csv_flag = app.add_flag("--csv", options.csv, "Emit CSV");
  json_flag->excludes(csv_flag);
  app.add_option("--out", options.out, "Output file (directory for sample/normalize)");
  app.add_option("--jobs", options.jobs, "Worker threads (default: ELECTRA_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_flag("--break-ties", options.break_ties, "Accept tied ballots, ordering each tie lower index first");

  cli::register_data_commands(app, options);
  cli::register_analysis_commands(app, options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << cli::error_record(e).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << cli::error_record(e).dump() << '\n';
    return 1;
  }
  return options.exit_code;
}
