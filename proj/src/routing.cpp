#include "rreed/routing.hpp"

#include <algorithm>
#include <stdexcept>

#include <cmath>
#include "rreed/queueing.hpp"

namespace rreed::routing {

void validate(const CostWeights& w) {
  if (!(w.alpha >= 0.0) || !(w.beta >= 0.0) || !(w.gamma >= 0.0)) {
    throw std::invalid_argument("cost weights must be non-negative");
  }
  if (w.alpha == 0.0 && w.beta == 0.0 && w.gamma == 0.0) {
    throw std::invalid_argument("cost weights must not all be zero");
  }
}

double cost(Seconds delay, Joules usable_energy, double prr, const CostWeights& w) {
  if (!(usable_energy > 0.0) || !(prr > 0.0) || !std::isfinite(delay)) return kInfinity;
  return w.alpha * delay + w.beta / usable_energy + w.gamma / prr;
}

double cost(const NeighborEntry& e, const CostWeights& w) {
  return cost(e.predicted_delay, e.usable_energy, e.prr, w);
}

std::vector<NeighborEntry> build_neighbor_table(TrafficClass cls, const NetworkSnapshot& snap,
                                                const CostWeights& w) {
  const Seconds service = static_cast<double>(snap.packet_bits) / snap.radio.bandwidth;
  const Joules rx_cost = energy::rx_energy(snap.packet_bits, snap.radio);

  std::vector<NeighborEntry> table;
  for (const CandidateState& c : snap.candidates) {
    if (!c.alive || c.id == snap.sender) continue;
    if (!geometry::is_allowed_neighbor(snap.sender_position, c.position, snap.sink_position,
                                       snap.radio_range)) {
      continue;
    }
    queueing::QueueModelParams q{queueing::ClassLoad::deterministic(c.rt_rate, service),
                                 queueing::ClassLoad::deterministic(c.nrt_rate, service)};
    NeighborEntry e;
    e.id = c.id;
    if (queueing::is_stable(cls, q)) {
      e.predicted_delay = queueing::wait_for(cls, q);
      if (snap.include_service_time) e.predicted_delay += service;
    } else {
      e.predicted_delay = kInfinity;
    }
    e.usable_energy = c.residual - rx_cost;
    e.prr = c.prr;
    e.cost = cost(e, w);
    table.push_back(e);
  }
  return table;
}

std::optional<NodeId> select_next_hop(std::span<const NeighborEntry> table, const CostWeights& w) {
  std::optional<NodeId> best;
  double best_cost = kInfinity;
  for (const NeighborEntry& e : table) {
    const double c = cost(e, w);
    if (c == kInfinity) continue;
    if (c < best_cost || (c == best_cost && e.id < *best)) {
      best_cost = c;
      best = e.id;
    }
  }
  return best;
}

Seconds min_finite_delay(std::span<const NeighborEntry> table) {
  Seconds best = kInfinity;
  for (const NeighborEntry& e : table) best = std::min(best, e.predicted_delay);
  return best;
}

DropDecision predictive_drop_check(Seconds deadline, Seconds now,
                                   const geometry::Position& sender,
                                   const geometry::Position& sink, Meters delta,
                                   Seconds min_hop_delay) {
  if (deadline == kInfinity) return DropDecision::Keep;
  if (now > deadline) return DropDecision::Drop;
  const unsigned hops = geometry::hops_linear(sender, sink, delta);
  return now + hops * min_hop_delay > deadline ? DropDecision::Drop : DropDecision::Keep;
}

}  // namespace rreed::routing
