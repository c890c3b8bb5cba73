#include "rreed/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "rreed/energy.hpp"
#include "rreed/geometry.hpp"
#include "rreed/link_estimation.hpp"
#include "rreed/routing.hpp"

namespace rreed::sim {

const char* to_string(DropCause c) {
  switch (c) {
    case DropCause::Expired: return "expired";
    case DropCause::Predictive: return "predictive";
    case DropCause::NoRoute: return "no_route";
    case DropCause::BufferOverflow: return "buffer_overflow";
    case DropCause::NodeDeath: return "node_death";
    case DropCause::LinkLoss: return "link_loss";
  }
  return "unknown";
}

void EventCalendar::schedule(Seconds time, EventKind kind, NodeId node, TrafficClass cls) {
  heap_.push(Event{time, next_sequence_++, kind, node, cls});
}

Event EventCalendar::pop() {
  Event e = heap_.top();
  heap_.pop();
  return e;
}

Seconds PoissonSource::next_after(Seconds now) {
  if (rate_ <= 0.0) return kInfinity;
  std::exponential_distribution<double> gap(rate_);
  return now + gap(rng_);
}

std::vector<Seconds> generate_traffic(double rate, Seconds horizon, Rng rng) {
  std::vector<Seconds> times;
  PoissonSource src(rate, std::move(rng));
  for (Seconds t = src.next_after(0.0); t < horizon; t = src.next_after(t)) times.push_back(t);
  return times;
}

void RateEstimator::on_arrival(Seconds now) {
  if (last_) {
    const Seconds gap = now - *last_;
    mean_gap_ = mean_gap_ ? (1.0 - smoothing_) * *mean_gap_ + smoothing_ * gap : gap;
  }
  last_ = now;
}

double RateEstimator::rate(Seconds now) const {
  if (!mean_gap_) return 0.0;
  const Seconds gap = std::max(*mean_gap_, now - *last_);
  return gap > 0.0 ? 1.0 / gap : kInfinity;
}

double NodeReport::mean_wait(TrafficClass c) const {
  const auto i = static_cast<std::size_t>(c);
  return wait_count[i] ? wait_sum[i] / static_cast<double>(wait_count[i]) : 0.0;
}

std::uint64_t Metrics::total_dropped() const {
  return std::accumulate(drops.begin(), drops.end(), std::uint64_t{0});
}

namespace {

constexpr NodeId kSink = 0;

std::size_t idx(TrafficClass c) { return static_cast<std::size_t>(c); }

struct Link {
  link::LinkStats stats;
  Rng loss_rng;
  double loss;
};

struct NodeState {
  geometry::Position position;
  energy::Battery battery{0.0};
  node::NodeQueues queues;
  std::array<RateEstimator, 2> rates;
  std::map<NodeId, Link> links;  // allowed neighbors, fixed by geometry
  double allowed_area = 0.0;
  bool alive = true;
};

DelayStats summarize(std::vector<Seconds>& delays) {
  DelayStats s;
  s.count = delays.size();
  if (delays.empty()) {
    s.mean = s.p95 = s.max = std::nan("");
    return s;
  }
  std::sort(delays.begin(), delays.end());
  double sum = 0.0;
  for (Seconds d : delays) sum += d;
  s.mean = sum / static_cast<double>(delays.size());
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(delays.size())));
  s.p95 = delays[std::max<std::size_t>(rank, 1) - 1];
  s.max = delays.back();
  return s;
}

class Simulation {
 public:
  Simulation(const ScenarioConfig& config, const RunOptions& options)
      : cfg_(config), opts_(options), radio_(config.radio()) {
    setup();
  }

  Metrics run();

 private:
  void setup();
  void on_generated(const Event& ev);
  void on_transmission_complete(const Event& ev);
  void on_node_death(const Event& ev);

  void arrive(NodeId at, node::Packet packet);
  void try_start_service(NodeId n);
  void deliver_hop(node::InService s, NodeId from);
  void drop(node::Packet&& p, DropCause cause, NodeId at);
  bool debit(NodeId n, Joules amount);
  routing::NetworkSnapshot snapshot(NodeId sender) const;
  void trace(TraceKind kind, NodeId node, const node::Packet& p);
  bool any_source_alive() const;
  void finish();

  const ScenarioConfig& cfg_;
  const RunOptions& opts_;
  energy::RadioParams radio_;
  std::vector<NodeState> nodes_;
  std::vector<PoissonSource> sources_;  // 2 per node: rt, nrt
  EventCalendar calendar_;
  Seconds now_ = 0.0;
  std::uint64_t next_packet_id_ = 0;
  std::uint32_t alive_sensors_ = 0;
  bool stopped_ = false;

  Metrics m_;
  std::array<std::vector<Seconds>, 2> delays_;
  std::vector<Seconds> delivery_times_;
};

void Simulation::setup() {
  const std::uint32_t n = cfg_.node_count;
  m_.seed = cfg_.seed;

  Rng placement = make_stream(cfg_.seed, "placement");
  std::uniform_real_distribution<double> ux(0.0, cfg_.grid_width);
  std::uniform_real_distribution<double> uy(0.0, cfg_.grid_height);

  nodes_.reserve(n);
  m_.nodes.resize(n);
  for (NodeId id = 0; id < n; ++id) {
    m_.nodes[id].id = id;
    NodeState s;
    s.battery = energy::Battery(cfg_.initial_energy);
    s.queues = node::NodeQueues(cfg_.queue_capacity);
    s.rates = {RateEstimator(cfg_.rate_smoothing), RateEstimator(cfg_.rate_smoothing)};
    if (id == kSink) {
      s.position = cfg_.sink;
      s.battery = energy::Battery::mains();
    } else {
      const double x = ux(placement);
      const double y = uy(placement);
      s.position = {x, y};
      if (const auto it = cfg_.positions.find(id); it != cfg_.positions.end()) {
        s.position = it->second;
      }
    }
    m_.nodes[id].position = s.position;
    nodes_.push_back(std::move(s));
  }

  const auto& sink = nodes_[kSink].position;
  for (NodeId a = 1; a < n; ++a) {
    NodeState& s = nodes_[a];
    for (NodeId b = 0; b < n; ++b) {
      if (a == b) continue;
      if (geometry::is_allowed_neighbor(s.position, nodes_[b].position, sink, cfg_.radio_range)) {
        const std::string label = "link/" + std::to_string(a) + "/" + std::to_string(b);
        s.links.emplace(b, Link{link::LinkStats(cfg_.prr_window), make_stream(cfg_.seed, label),
                                cfg_.loss_probability(a, b)});
      }
    }
    if (geometry::distance(s.position, sink) > 0.0) {
      s.allowed_area = geometry::allowed_area(s.position, sink, cfg_.radio_range);
    }
  }
  alive_sensors_ = n - 1;
  m_.alive_changes.emplace_back(0.0, alive_sensors_);

  sources_.reserve(2 * static_cast<std::size_t>(n));
  for (NodeId id = 0; id < n; ++id) {
    const bool src = cfg_.is_source(id);
    const std::string base = "traffic/" + std::to_string(id);
    sources_.emplace_back(src ? cfg_.rt_rate : 0.0, make_stream(cfg_.seed, base + "/rt"));
    sources_.emplace_back(src ? cfg_.nrt_rate : 0.0, make_stream(cfg_.seed, base + "/nrt"));
  }
  for (NodeId id = 1; id < n; ++id) {
    for (TrafficClass c : {TrafficClass::RealTime, TrafficClass::NonRealTime}) {
      const Seconds t = sources_[2 * id + idx(c)].next_after(0.0);
      if (t <= cfg_.duration) calendar_.schedule(t, EventKind::PacketGenerated, id, c);
    }
  }
}

Metrics Simulation::run() {
  while (!stopped_ && !calendar_.empty() && calendar_.top().time <= cfg_.duration) {
    const Event ev = calendar_.pop();
    now_ = ev.time;
    switch (ev.kind) {
      case EventKind::PacketGenerated: on_generated(ev); break;
      case EventKind::TransmissionComplete: on_transmission_complete(ev); break;
      case EventKind::NodeDeath: on_node_death(ev); break;
    }
  }
  m_.end_time = stopped_ ? now_ : cfg_.duration;
  finish();
  return std::move(m_);
}

void Simulation::on_generated(const Event& ev) {
  NodeState& src = nodes_[ev.node];
  if (!src.alive) return;

  node::Packet p;
  p.id = next_packet_id_++;
  p.cls = ev.cls;
  p.size = cfg_.packet_size;
  p.source = ev.node;
  p.sink = kSink;
  p.created_at = now_;
  p.deadline =
      now_ + (ev.cls == TrafficClass::RealTime ? cfg_.rt_deadline : cfg_.nrt_deadline);
  p.hop_trace.push_back({ev.node, now_});
  ++m_.generated[idx(ev.cls)];
  trace(TraceKind::Generated, ev.node, p);

  const Seconds next = sources_[2 * ev.node + idx(ev.cls)].next_after(now_);
  if (next <= cfg_.duration) calendar_.schedule(next, EventKind::PacketGenerated, ev.node, ev.cls);

  arrive(ev.node, std::move(p));
}

void Simulation::on_transmission_complete(const Event& ev) {
  NodeState& n = nodes_[ev.node];
  // A node that died mid-transmission already dropped its in-service packet.
  if (!n.alive || !n.queues.busy()) return;
  node::InService s = n.queues.finish_service();
  trace(TraceKind::ServiceComplete, ev.node, s.packet);
  deliver_hop(std::move(s), ev.node);
  if (n.alive) try_start_service(ev.node);
}

void Simulation::on_node_death(const Event& ev) {
  for (node::Packet& p : nodes_[ev.node].queues.drain()) {
    drop(std::move(p), DropCause::NodeDeath, ev.node);
  }
  if (!any_source_alive()) stopped_ = true;
}

void Simulation::arrive(NodeId at, node::Packet packet) {
  NodeState& n = nodes_[at];
  if (!n.alive) {
    drop(std::move(packet), DropCause::NodeDeath, at);
    return;
  }
  if (packet.deadline < now_) {
    drop(std::move(packet), DropCause::Expired, at);
    return;
  }
  n.rates[idx(packet.cls)].on_arrival(now_);
  const std::uint64_t id = packet.id;
  const TrafficClass cls = packet.cls;
  if (n.queues.classify_enqueue(std::move(packet), now_) == node::EnqueueResult::QueueFull) {
    drop(std::move(packet), DropCause::BufferOverflow, at);
    return;
  }
  if (opts_.record_trace && opts_.trace) {
    opts_.trace->push_back({now_, TraceKind::Enqueued, at, id, cls});
  }
  if (!n.queues.busy()) try_start_service(at);
}

routing::NetworkSnapshot Simulation::snapshot(NodeId sender) const {
  const NodeState& s = nodes_[sender];
  routing::NetworkSnapshot snap;
  snap.sender = sender;
  snap.sender_position = s.position;
  snap.sink_position = nodes_[kSink].position;
  snap.radio_range = cfg_.radio_range;
  snap.packet_bits = cfg_.packet_size;
  snap.radio = radio_;
  snap.include_service_time = cfg_.include_service_time;
  snap.candidates.reserve(s.links.size());
  for (const auto& [id, link] : s.links) {
    const NodeState& c = nodes_[id];
    snap.candidates.push_back({.id = id,
                               .position = c.position,
                               .alive = c.alive,
                               .residual = c.battery.residual(),
                               .rt_rate = c.rates[0].rate(now_),
                               .nrt_rate = c.rates[1].rate(now_),
                               .prr = link.stats.prr()});
  }
  return snap;
}

void Simulation::try_start_service(NodeId at) {
  NodeState& n = nodes_[at];
  while (n.alive && !n.queues.busy()) {
    for (node::Packet& p : n.queues.expire_drops(now_)) drop(std::move(p), DropCause::Expired, at);
    std::optional<node::Packet> next = n.queues.dequeue_next();
    if (!next) return;
    node::Packet p = std::move(*next);

    const routing::NetworkSnapshot snap = snapshot(at);
    const auto table = routing::build_neighbor_table(p.cls, snap, cfg_.weights);
    const std::optional<NodeId> hop = routing::select_next_hop(table, cfg_.weights);
    if (!hop) {
      drop(std::move(p), DropCause::NoRoute, at);
      continue;
    }
    if (cfg_.predictive_drop) {
      const Meters spacing = n.allowed_area > 0.0
                                 ? geometry::delta(n.allowed_area, table.size())
                                 : kInfinity;
      if (routing::predictive_drop_check(p.deadline, now_, n.position, snap.sink_position,
                                         spacing, routing::min_finite_delay(table)) ==
          routing::DropDecision::Drop) {
        drop(std::move(p), DropCause::Predictive, at);
        continue;
      }
    }

    NodeReport& r = m_.nodes.at(at);
    r.wait_sum[idx(p.cls)] += now_ - p.enqueued_at;
    ++r.wait_count[idx(p.cls)];

    const Seconds done = now_ + node::service_time(p, radio_);
    trace(TraceKind::ServiceStart, at, p);
    n.queues.begin_service({std::move(p), *hop, done});
    calendar_.schedule(done, EventKind::TransmissionComplete, at);
  }
}

bool Simulation::debit(NodeId id, Joules amount) {
  NodeState& n = nodes_[id];
  if (n.battery.unlimited()) return true;
  Joules drawn = 0.0;
  const auto status = n.battery.debit(amount, &drawn);
  m_.energy_consumed += drawn;
  m_.nodes[id].drawn += drawn;
  if (status == energy::DebitStatus::Ok) return true;

  if (n.alive) {
    n.alive = false;
    --alive_sensors_;
    m_.nodes[id].alive = false;
    m_.nodes[id].death_time = now_;
    m_.alive_changes.emplace_back(now_, alive_sensors_);
    if (!m_.first_dead_node) {
      m_.first_dead_node = id;
      m_.first_death_time = now_;
    }
    calendar_.schedule(now_, EventKind::NodeDeath, id);
  }
  return false;
}

void Simulation::deliver_hop(node::InService s, NodeId from) {
  node::Packet p = std::move(s.packet);
  const NodeId to = s.next_hop;
  NodeState& sender = nodes_[from];
  NodeState& receiver = nodes_[to];

  const Meters d = geometry::distance(sender.position, receiver.position);
  if (!debit(from, energy::tx_energy(p.size, d, radio_))) {
    drop(std::move(p), DropCause::NodeDeath, from);
    return;
  }
  ++m_.nodes[from].tx_count;

  Link& link = sender.links.at(to);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const bool lost = u(link.loss_rng) < link.loss;
  if (!receiver.alive) {
    link.stats.record_outcome(false);
    drop(std::move(p), DropCause::NodeDeath, to);
    return;
  }
  if (lost) {
    link.stats.record_outcome(false);
    drop(std::move(p), DropCause::LinkLoss, from);
    return;
  }
  link.stats.record_outcome(true);

  if (to != kSink && !debit(to, energy::rx_energy(p.size, radio_))) {
    drop(std::move(p), DropCause::NodeDeath, to);
    return;
  }
  ++m_.nodes[to].rx_count;
  p.hop_trace.push_back({to, now_});

  if (to != kSink) {
    arrive(to, std::move(p));
    return;
  }
  // Expired in flight: the last hop completed after the deadline.
  if (now_ > p.deadline) {
    drop(std::move(p), DropCause::Expired, to);
    return;
  }
  ++m_.delivered[idx(p.cls)];
  delays_[idx(p.cls)].push_back(now_ - p.created_at);
  delivery_times_.push_back(now_);
  trace(TraceKind::Delivered, to, p);
  if (opts_.on_delivery) opts_.on_delivery(p, now_);
}

void Simulation::drop(node::Packet&& p, DropCause cause, NodeId at) {
  ++m_.drops[static_cast<std::size_t>(cause)];
  trace(TraceKind::Dropped, at, p);
}

void Simulation::trace(TraceKind kind, NodeId node, const node::Packet& p) {
  if (opts_.record_trace && opts_.trace) opts_.trace->push_back({now_, kind, node, p.id, p.cls});
}

bool Simulation::any_source_alive() const {
  for (NodeId id = 1; id < nodes_.size(); ++id) {
    if (nodes_[id].alive && cfg_.is_source(id)) return true;
  }
  return false;
}

void Simulation::finish() {
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    NodeState& n = nodes_[id];
    NodeReport& r = m_.nodes[id];
    r.initial = n.battery.initial();
    r.residual = n.battery.residual();
    m_.in_flight += n.queues.queued(TrafficClass::RealTime) +
                    n.queues.queued(TrafficClass::NonRealTime) + (n.queues.busy() ? 1 : 0);
  }
  for (std::size_t c = 0; c < 2; ++c) m_.delay[c] = summarize(delays_[c]);

  std::sort(delivery_times_.begin(), delivery_times_.end());
  std::size_t change = 0;
  std::uint32_t alive = m_.alive_changes.front().second;
  for (std::uint64_t k = 0;; ++k) {
    const Seconds t = static_cast<double>(k) * cfg_.timeline_interval;
    if (t > m_.end_time) break;
    while (change < m_.alive_changes.size() && m_.alive_changes[change].first <= t) {
      alive = m_.alive_changes[change++].second;
    }
    const auto delivered = static_cast<std::uint64_t>(
        std::upper_bound(delivery_times_.begin(), delivery_times_.end(), t) -
        delivery_times_.begin());
    m_.timeline.push_back({t, alive, delivered});
  }
}

}  // namespace

Metrics run(const ScenarioConfig& config, const RunOptions& options) {
  Simulation sim(config, options);
  return sim.run();
}

}  // namespace rreed::sim
