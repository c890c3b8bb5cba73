#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "rreed/engine.hpp"
#include "rreed/scenario.hpp"

namespace rreed::report {

/// Header row of metrics.csv. Column order is part of the output contract.
std::string metrics_header();
std::string metrics_row(const sim::Metrics& m);

std::string timeline_header();
void write_timeline_rows(std::ostream& os, const sim::Metrics& m);

void write_summary(std::ostream& os, const sim::Metrics& m);

/// Float formatting used by every CSV column: 9 significant digits.
std::string format_number(double v);

struct ReportOptions {
  std::filesystem::path out_dir = ".";
  std::size_t seeds = 1;  // consecutive seeds starting at config.seed
  bool quiet = false;
};

/// Runs every requested seed and writes metrics.csv and timeline.csv into
/// the output directory. Returns a process exit status; diagnostics go to `err`.
int run_and_report(const ScenarioConfig& config, const ReportOptions& options,
                   std::ostream& out, std::ostream& err);

}  // namespace rreed::report
