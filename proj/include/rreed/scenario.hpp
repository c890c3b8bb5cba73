#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rreed/energy.hpp"
#include "rreed/geometry.hpp"
#include "rreed/routing.hpp"
#include "rreed/units.hpp"

namespace rreed {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Everything a run needs. Defaults reproduce the reference parameter table:
/// 2 J batteries, 100-bit packets, E_elec 50 nJ/bit, eps_fs 10 pJ/bit/m^2,
/// eps_amp 0.0013 pJ/bit/m^4, a 1000 x 1000 m grid and weights 0.6/0.3/0.1.
/// Radio constants are held in the units they are configured in.
struct ScenarioConfig {
  double grid_width = 1000.0;
  double grid_height = 1000.0;
  std::uint32_t node_count = 400;  // including the sink, which is node 0
  geometry::Position sink{500.0, 500.0};
  std::map<NodeId, geometry::Position> positions;  // explicit placements

  double e_elec_nj = 50.0;
  double eps_fs_pj = 10.0;
  double eps_amp_pj = 0.0013;
  double bandwidth = 250000.0;
  Meters radio_range = 0.0;  // 0 before load resolves it to the crossover distance

  Joules initial_energy = 2.0;
  Bits packet_size = 100;

  double rt_rate = 0.2;  // packets/s per source
  double nrt_rate = 0.2;
  Seconds rt_deadline = 0.1;  // budget from creation; may be infinite
  Seconds nrt_deadline = 2.0;
  std::vector<NodeId> sources;  // empty: every non-sink node

  routing::CostWeights weights;
  bool predictive_drop = true;
  bool include_service_time = true;
  double rate_smoothing = 0.1;

  std::size_t prr_window = 100;
  std::size_t queue_capacity = 64;
  double link_loss = 0.0;
  std::map<std::pair<NodeId, NodeId>, double> link_loss_overrides;

  Seconds duration = 1000.0;
  std::uint64_t seed = 1;
  Seconds timeline_interval = 10.0;

  energy::RadioParams radio() const;
  double loss_probability(NodeId from, NodeId to) const;
  bool is_source(NodeId id) const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Fills derived defaults (radio range) and checks every constraint.
/// Throws ConfigError naming the first offending key.
void finalize(ScenarioConfig& config);

/// Parses `key = value` lines. `#` starts a comment; omitted keys keep their
/// defaults. Later duplicates override earlier ones.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Writes every key of the effective configuration; parse_config of the
/// result yields an equal config.
std::string serialize_config(const ScenarioConfig& config);

}  // namespace rreed
