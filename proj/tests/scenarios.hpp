#pragma once

// Small hand-placed topologies shared by the engine tests and the acceptance suite.

#include "rreed/engine.hpp"
#include "rreed/scenario.hpp"

namespace scenarios {

// Sink at the origin, node 1 at 50 m. Only node 1 generates traffic.
inline rreed::ScenarioConfig single_hop(double rt_rate, double nrt_rate, double duration) {
  rreed::ScenarioConfig c;
  c.grid_width = 200;
  c.grid_height = 200;
  c.node_count = 2;
  c.sink = {0, 0};
  c.positions[1] = {50, 0};
  c.rt_rate = rt_rate;
  c.nrt_rate = nrt_rate;
  c.rt_deadline = rreed::kInfinity;
  c.nrt_deadline = rreed::kInfinity;
  c.duration = duration;
  rreed::finalize(c);
  return c;
}

// Source (node 2) -> relay (node 1) -> sink, 50 m apart on a line, 60 m range.
inline rreed::ScenarioConfig chain(double rt_rate, double nrt_rate, double duration) {
  rreed::ScenarioConfig c;
  c.grid_width = 200;
  c.grid_height = 200;
  c.node_count = 3;
  c.sink = {0, 0};
  c.positions[1] = {50, 0};
  c.positions[2] = {100, 0};
  c.radio_range = 60;
  c.sources = {2};
  c.rt_rate = rt_rate;
  c.nrt_rate = nrt_rate;
  c.rt_deadline = rreed::kInfinity;
  c.nrt_deadline = rreed::kInfinity;
  c.queue_capacity = 1000000;
  c.duration = duration;
  rreed::finalize(c);
  return c;
}

// 50 random nodes around a central sink on a 300 m square, tight RT deadlines.
inline rreed::ScenarioConfig dense_field(std::uint64_t seed) {
  rreed::ScenarioConfig c;
  c.grid_width = 300;
  c.grid_height = 300;
  c.sink = {150, 150};
  c.node_count = 50;
  c.radio_range = 70;
  c.rt_rate = 2.0;
  c.nrt_rate = 2.0;
  c.rt_deadline = 0.0012;
  c.nrt_deadline = 0.5;
  c.link_loss = 0.05;
  c.duration = 60;
  c.seed = seed;
  rreed::finalize(c);
  return c;
}

}  // namespace scenarios
