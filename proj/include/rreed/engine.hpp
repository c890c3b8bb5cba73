#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "rreed/geometry.hpp"
#include "rreed/node_runtime.hpp"
#include "rreed/rng.hpp"
#include "rreed/scenario.hpp"
#include "rreed/units.hpp"

namespace rreed::sim {

enum class DropCause : std::uint8_t {
  Expired,
  Predictive,
  NoRoute,
  BufferOverflow,
  NodeDeath,
  LinkLoss,
};
inline constexpr std::size_t kDropCauseCount = 6;
const char* to_string(DropCause c);

enum class EventKind : std::uint8_t { PacketGenerated, TransmissionComplete, NodeDeath };

struct Event {
  Seconds time = 0.0;
  std::uint64_t sequence = 0;
  EventKind kind = EventKind::PacketGenerated;
  NodeId node = 0;
  TrafficClass cls = TrafficClass::RealTime;
};

// Min-heap on (time, sequence).
class EventCalendar {
 public:
  void schedule(Seconds time, EventKind kind, NodeId node,
                TrafficClass cls = TrafficClass::RealTime);
  bool empty() const { return heap_.empty(); }
  const Event& top() const { return heap_.top(); }
  Event pop();
  std::size_t size() const { return heap_.size(); }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.sequence > b.sequence;
    }
  };
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::uint64_t next_sequence_ = 0;
};

/// Poisson arrival process for one source and class.
class PoissonSource {
 public:
  PoissonSource(double rate, Rng rng) : rate_(rate), rng_(std::move(rng)) {}

  /// Time of the next arrival after `now`, or infinity for a zero rate.
  Seconds next_after(Seconds now);
  double rate() const { return rate_; }

 private:
  double rate_;
  Rng rng_;
};

/// All arrival times in [0, horizon).
std::vector<Seconds> generate_traffic(double rate, Seconds horizon, Rng rng);

/// Exponentially weighted estimate of an arrival rate from interarrival gaps.
class RateEstimator {
 public:
  explicit RateEstimator(double smoothing = 0.1) : smoothing_(smoothing) {}

  void on_arrival(Seconds now);
  /// 1 / max(smoothed gap, time since last arrival); 0 until two arrivals.
  double rate(Seconds now) const;

 private:
  double smoothing_;
  std::optional<Seconds> last_;
  std::optional<Seconds> mean_gap_;
};

struct DelayStats {
  std::uint64_t count = 0;
  Seconds mean = 0.0;
  Seconds p95 = 0.0;
  Seconds max = 0.0;
};

struct NodeReport {
  NodeId id = 0;
  geometry::Position position;
  Joules initial = 0.0;
  Joules residual = 0.0;
  Joules drawn = 0.0;  // sum of recorded tx/rx debits
  std::uint64_t tx_count = 0;  // transmissions whose energy was paid
  std::uint64_t rx_count = 0;
  std::array<double, 2> wait_sum{};  // queueing wait before service, per class
  std::array<std::uint64_t, 2> wait_count{};
  bool alive = true;
  Seconds death_time = kInfinity;

  double mean_wait(TrafficClass c) const;
};

struct TimelineSample {
  Seconds time = 0.0;
  std::uint32_t alive = 0;
  std::uint64_t delivered = 0;
};

struct Metrics {
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 2> generated{};
  std::array<std::uint64_t, 2> delivered{};
  std::array<std::uint64_t, kDropCauseCount> drops{};
  std::uint64_t in_flight = 0;
  std::array<DelayStats, 2> delay{};
  Joules energy_consumed = 0.0;  // ledger of every debit, in event order
  Seconds first_death_time = kInfinity;
  std::optional<NodeId> first_dead_node;
  std::vector<std::pair<Seconds, std::uint32_t>> alive_changes;  // (time, alive count)
  std::vector<TimelineSample> timeline;
  std::vector<NodeReport> nodes;
  Seconds end_time = 0.0;

  std::uint64_t total_generated() const { return generated[0] + generated[1]; }
  std::uint64_t total_delivered() const { return delivered[0] + delivered[1]; }
  std::uint64_t total_dropped() const;
  std::uint64_t dropped(DropCause c) const { return drops[static_cast<std::size_t>(c)]; }
};

enum class TraceKind : std::uint8_t {
  Generated,
  Enqueued,
  ServiceStart,
  ServiceComplete,
  Delivered,
  Dropped,
};

struct TraceRecord {
  Seconds time;
  TraceKind kind;
  NodeId node;
  std::uint64_t packet;
  TrafficClass cls;
};

struct RunOptions {
  // Called for every packet accepted by the sink, with the arrival time.
  std::function<void(const node::Packet&, Seconds)> on_delivery;
  bool record_trace = false;
  std::vector<TraceRecord>* trace = nullptr;
};

/// Runs one scenario to its horizon or until every source is dead.
/// `config` must have been finalized.
Metrics run(const ScenarioConfig& config, const RunOptions& options = {});

}  // namespace rreed::sim
