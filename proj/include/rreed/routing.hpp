#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rreed/energy.hpp"
#include "rreed/geometry.hpp"
#include "rreed/units.hpp"

namespace rreed::routing {

struct CostWeights {
  double alpha = 0.6;  // queueing delay, seconds
  double beta = 0.3;   // inverse usable energy, 1/J
  double gamma = 0.1;  // inverse PRR

  friend bool operator==(const CostWeights&, const CostWeights&) = default;
};

void validate(const CostWeights& w);

/// What a sender can see of one potential next hop.
struct CandidateState {
  NodeId id = 0;
  geometry::Position position;
  bool alive = true;
  Joules residual = 0.0;  // infinite for a mains-powered sink
  double rt_rate = 0.0;   // measured arrival rates at the candidate, packets/s
  double nrt_rate = 0.0;
  double prr = 1.0;       // sender -> candidate
};

struct NetworkSnapshot {
  NodeId sender = 0;
  geometry::Position sender_position;
  geometry::Position sink_position;
  Meters radio_range = 0.0;
  Bits packet_bits = 100;
  energy::RadioParams radio;
  // Adds the transmission time k/bandwidth to the predicted queueing wait.
  bool include_service_time = true;
  std::vector<CandidateState> candidates;
};

struct NeighborEntry {
  NodeId id = 0;
  Seconds predicted_delay = 0.0;  // infinite when the candidate's queue is unstable
  Joules usable_energy = 0.0;
  double prr = 1.0;
  double cost = kInfinity;
};

/// Weighted cost alpha*delay + beta/energy + gamma/prr in raw SI units.
/// Infinite when the delay is infinite, energy <= 0 or prr == 0.
double cost(Seconds delay, Joules usable_energy, double prr, const CostWeights& w);
double cost(const NeighborEntry& e, const CostWeights& w);

/// One entry per alive candidate inside the sender's allowed area, in
/// candidate order. An empty result means no route exists.
std::vector<NeighborEntry> build_neighbor_table(TrafficClass cls, const NetworkSnapshot& snap,
                                                const CostWeights& w);

/// Minimum finite-cost entry; ties go to the lowest id.
std::optional<NodeId> select_next_hop(std::span<const NeighborEntry> table, const CostWeights& w);

/// Smallest finite predicted delay in the table, or infinity.
Seconds min_finite_delay(std::span<const NeighborEntry> table);

enum class DropDecision { Keep, Drop };

/// Drops when the estimated remaining path delay cannot meet the deadline:
/// now + hops_linear(sender, sink, delta) * min_hop_delay > deadline.
DropDecision predictive_drop_check(Seconds deadline, Seconds now,
                                   const geometry::Position& sender,
                                   const geometry::Position& sink, Meters delta,
                                   Seconds min_hop_delay);

}  // namespace rreed::routing
