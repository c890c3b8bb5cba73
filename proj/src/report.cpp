#include "rreed/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <system_error>

namespace rreed::report {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string metrics_header() {
  return "seed,generated_rt,generated_nrt,delivered_rt,delivered_nrt,"
         "drop_expired,drop_predictive,drop_no_route,drop_buffer_overflow,"
         "drop_node_death,drop_link_loss,in_flight,"
         "rt_delay_mean,rt_delay_p95,rt_delay_max,"
         "nrt_delay_mean,nrt_delay_p95,nrt_delay_max,"
         "energy_consumed,first_death_time";
}

std::string metrics_row(const sim::Metrics& m) {
  std::ostringstream os;
  os << m.seed << ',' << m.generated[0] << ',' << m.generated[1] << ',' << m.delivered[0] << ','
     << m.delivered[1];
  for (std::uint64_t d : m.drops) os << ',' << d;
  os << ',' << m.in_flight;
  for (const sim::DelayStats& s : m.delay) {
    os << ',' << format_number(s.mean) << ',' << format_number(s.p95) << ','
       << format_number(s.max);
  }
  os << ',' << format_number(m.energy_consumed) << ',' << format_number(m.first_death_time);
  return os.str();
}

std::string timeline_header() { return "seed,time,alive,delivered"; }

void write_timeline_rows(std::ostream& os, const sim::Metrics& m) {
  for (const sim::TimelineSample& s : m.timeline) {
    os << m.seed << ',' << format_number(s.time) << ',' << s.alive << ',' << s.delivered << '\n';
  }
}

void write_summary(std::ostream& os, const sim::Metrics& m) {
  os << "seed " << m.seed << ": generated " << m.total_generated() << " (rt " << m.generated[0]
     << ", nrt " << m.generated[1] << "), delivered " << m.total_delivered() << " (rt "
     << m.delivered[0] << ", nrt " << m.delivered[1] << "), in flight " << m.in_flight << '\n';
  os << "  drops:";
  for (std::size_t i = 0; i < sim::kDropCauseCount; ++i) {
    os << ' ' << sim::to_string(static_cast<sim::DropCause>(i)) << '=' << m.drops[i];
  }
  os << '\n';
  os << "  delay rt mean " << format_number(m.delay[0].mean) << " s, p95 "
     << format_number(m.delay[0].p95) << " s; nrt mean " << format_number(m.delay[1].mean)
     << " s, p95 " << format_number(m.delay[1].p95) << " s\n";
  os << "  energy consumed " << format_number(m.energy_consumed) << " J, first death ";
  if (m.first_dead_node) {
    os << "node " << *m.first_dead_node << " at " << format_number(m.first_death_time) << " s";
  } else {
    os << "none";
  }
  os << ", alive at end " << m.alive_changes.back().second << '\n';
}

int run_and_report(const ScenarioConfig& config, const ReportOptions& options,
                   std::ostream& out, std::ostream& err) {
  if (options.seeds == 0) {
    err << "error: seed count must be positive\n";
    return 2;
  }
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) {
    err << "error: cannot create output directory " << options.out_dir << ": " << ec.message()
        << '\n';
    return 3;
  }
  std::ofstream metrics(options.out_dir / "metrics.csv", std::ios::binary);
  std::ofstream timeline(options.out_dir / "timeline.csv", std::ios::binary);
  if (!metrics || !timeline) {
    err << "error: cannot write into " << options.out_dir << '\n';
    return 3;
  }

  std::vector<std::future<sim::Metrics>> runs;
  runs.reserve(options.seeds);
  for (std::size_t i = 0; i < options.seeds; ++i) {
    ScenarioConfig c = config;
    c.seed = config.seed + i;
    runs.push_back(std::async(std::launch::async, [c] { return sim::run(c); }));
  }

  metrics << metrics_header() << '\n';
  timeline << timeline_header() << '\n';
  for (auto& f : runs) {
    const sim::Metrics m = f.get();
    metrics << metrics_row(m) << '\n';
    write_timeline_rows(timeline, m);
    if (!options.quiet) write_summary(out, m);
  }
  metrics.flush();
  timeline.flush();
  if (!metrics || !timeline) {
    err << "error: write failed in " << options.out_dir << '\n';
    return 3;
  }
  return 0;
}

}  // namespace rreed::report
