#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "rreed/energy.hpp"
#include "rreed/units.hpp"

namespace rreed::node {

struct HopRecord {
  NodeId node;
  Seconds time;
};

struct Packet {
  std::uint64_t id = 0;
  TrafficClass cls = TrafficClass::RealTime;
  Bits size = 100;
  NodeId source = 0;
  NodeId sink = 0;
  Seconds created_at = 0.0;
  Seconds deadline = kInfinity;
  std::vector<HopRecord> hop_trace;

  // Time the packet joined the queue it currently sits in.
  Seconds enqueued_at = 0.0;
};

struct InService {
  Packet packet;
  NodeId next_hop = 0;
  Seconds completes_at = 0.0;
};

enum class EnqueueResult { Queued, QueueFull };

inline constexpr std::size_t kDefaultQueueCapacity = 64;

// Strict-priority pair of FIFOs in front of a single non-preemptive transmitter.
class NodeQueues {
 public:
  explicit NodeQueues(std::size_t capacity_per_class = kDefaultQueueCapacity);

  /// Appends to the queue of the packet's class. The caller starts service
  /// when the transmitter is idle. A rejected packet is left untouched.
  EnqueueResult classify_enqueue(Packet&& packet, Seconds now);

  /// Head of the RT queue, else head of the NRT queue. Must not be called
  /// while a packet is in service.
  std::optional<Packet> dequeue_next();

  /// Removes every queued packet whose deadline is earlier than `now`.
  /// The in-service packet is never touched.
  std::vector<Packet> expire_drops(Seconds now);

  /// Empties both queues and the transmitter.
  std::vector<Packet> drain();

  void begin_service(InService s);
  InService finish_service();

  bool busy() const { return in_service_.has_value(); }
  const std::optional<InService>& in_service() const { return in_service_; }
  std::size_t queued(TrafficClass cls) const;
  std::size_t capacity() const { return capacity_; }

 private:
  std::deque<Packet>& fifo(TrafficClass cls) {
    return cls == TrafficClass::RealTime ? rt_ : nrt_;
  }

  std::deque<Packet> rt_;
  std::deque<Packet> nrt_;
  std::optional<InService> in_service_;
  std::size_t capacity_;
};

/// Transmission time k / bandwidth.
Seconds service_time(const Packet& packet, const energy::RadioParams& radio);

}  // namespace rreed::node
