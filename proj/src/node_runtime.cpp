#include "rreed/node_runtime.hpp"

#include <stdexcept>
#include <utility>

namespace rreed::node {

NodeQueues::NodeQueues(std::size_t capacity_per_class) : capacity_(capacity_per_class) {
  if (capacity_ == 0) throw std::invalid_argument("queue capacity must be positive");
}

EnqueueResult NodeQueues::classify_enqueue(Packet&& packet, Seconds now) {
  auto& q = fifo(packet.cls);
  if (q.size() >= capacity_) return EnqueueResult::QueueFull;
  packet.enqueued_at = now;
  q.push_back(std::move(packet));
  return EnqueueResult::Queued;
}

std::optional<Packet> NodeQueues::dequeue_next() {
  if (in_service_) throw std::logic_error("dequeue while transmitter busy");
  for (auto* q : {&rt_, &nrt_}) {
    if (!q->empty()) {
      Packet p = std::move(q->front());
      q->pop_front();
      return p;
    }
  }
  return std::nullopt;
}

std::vector<Packet> NodeQueues::expire_drops(Seconds now) {
  std::vector<Packet> dropped;
  for (auto* q : {&rt_, &nrt_}) {
    std::deque<Packet> kept;
    for (Packet& p : *q) {
      if (p.deadline < now) {
        dropped.push_back(std::move(p));
      } else {
        kept.push_back(std::move(p));
      }
    }
    q->swap(kept);
  }
  return dropped;
}

std::vector<Packet> NodeQueues::drain() {
  std::vector<Packet> out;
  if (in_service_) {
    out.push_back(std::move(in_service_->packet));
    in_service_.reset();
  }
  for (auto* q : {&rt_, &nrt_}) {
    for (Packet& p : *q) out.push_back(std::move(p));
    q->clear();
  }
  return out;
}

void NodeQueues::begin_service(InService s) {
  if (in_service_) throw std::logic_error("transmitter already busy");
  in_service_ = std::move(s);
}

InService NodeQueues::finish_service() {
  if (!in_service_) throw std::logic_error("no packet in service");
  InService s = std::move(*in_service_);
  in_service_.reset();
  return s;
}

std::size_t NodeQueues::queued(TrafficClass cls) const {
  return cls == TrafficClass::RealTime ? rt_.size() : nrt_.size();
}

Seconds service_time(const Packet& packet, const energy::RadioParams& radio) {
  return static_cast<double>(packet.size) / radio.bandwidth;
}

}  // namespace rreed::node
