// Command-line driver: load a scenario, run one or more seeds, write CSVs.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rreed/report.hpp"
#include "rreed/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Discrete-event simulator for QoS-aware geographic routing in sensor networks"};

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::size_t seeds = 1;
  std::optional<double> duration;
  std::string out_dir = ".";
  bool quiet = false;
  bool print_config = false;

  app.add_option("--config", config_path, "Scenario file (key = value lines)");
  app.add_option("--seed", seed, "Master seed, overrides the file");
  app.add_option("--seeds", seeds, "Number of consecutive seeds to sweep")->check(CLI::PositiveNumber);
  app.add_option("--duration", duration, "Simulated seconds, overrides the file");
  app.add_option("--out", out_dir, "Directory for metrics.csv and timeline.csv");
  app.add_flag("--quiet", quiet, "Suppress the summary on standard output");
  app.add_flag("--print-config", print_config, "Print the effective configuration and exit");
  CLI11_PARSE(app, argc, argv);

  rreed::ScenarioConfig config;
  try {
    config = config_path.empty() ? rreed::parse_config("") : rreed::load_config(config_path);
    if (seed) config.seed = *seed;
    if (duration) config.duration = *duration;
    rreed::finalize(config);
  } catch (const rreed::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  if (print_config) {
    std::cout << rreed::serialize_config(config);
    return 0;
  }

  rreed::report::ReportOptions options{out_dir, seeds, quiet};
  return rreed::report::run_and_report(config, options, std::cout, std::cerr);
}
