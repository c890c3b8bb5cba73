#include "doctest.h"
#include "rreed/node_runtime.hpp"

using namespace rreed;
using namespace rreed::node;

namespace {

Packet make(std::uint64_t id, TrafficClass cls, Seconds deadline = kInfinity) {
  Packet p;
  p.id = id;
  p.cls = cls;
  p.deadline = deadline;
  return p;
}

}  // namespace

TEST_CASE("classify and dequeue") {
  NodeQueues q;
  CHECK(q.classify_enqueue(make(1, TrafficClass::NonRealTime), 0.0) == EnqueueResult::Queued);
  CHECK(q.classify_enqueue(make(2, TrafficClass::RealTime), 0.1) == EnqueueResult::Queued);
  CHECK(q.classify_enqueue(make(3, TrafficClass::RealTime), 0.2) == EnqueueResult::Queued);
  CHECK(q.queued(TrafficClass::RealTime) == 2);
  CHECK(q.dequeue_next()->id == 2);
  CHECK(q.dequeue_next()->id == 3);
  const auto nrt = q.dequeue_next();
  CHECK(nrt->id == 1);
  CHECK(nrt->enqueued_at == 0.0);
  CHECK_FALSE(q.dequeue_next().has_value());
}

TEST_CASE("FIFO within class") {
  NodeQueues q;
  q.classify_enqueue(make(5, TrafficClass::NonRealTime), 0.0);
  q.classify_enqueue(make(6, TrafficClass::NonRealTime), 0.0);
  CHECK(q.dequeue_next()->id == 5);
  CHECK(q.dequeue_next()->id == 6);
}

TEST_CASE("capacity") {
  NodeQueues q(64);
  for (int i = 0; i < 64; ++i) {
    REQUIRE(q.classify_enqueue(make(i, TrafficClass::RealTime), 0.0) == EnqueueResult::Queued);
  }
  Packet extra = make(64, TrafficClass::RealTime);
  CHECK(q.classify_enqueue(std::move(extra), 0.0) == EnqueueResult::QueueFull);
  CHECK(extra.id == 64);  // rejected packet stays with the caller
  CHECK(q.classify_enqueue(make(65, TrafficClass::NonRealTime), 0.0) == EnqueueResult::Queued);
  CHECK_THROWS(NodeQueues(0));
}

TEST_CASE("expiry") {
  NodeQueues q;
  q.classify_enqueue(make(1, TrafficClass::RealTime, 5.0), 0.0);
  CHECK(q.expire_drops(1.0).empty());
  CHECK(q.queued(TrafficClass::RealTime) == 1);

  q.classify_enqueue(make(2, TrafficClass::RealTime, 0.5), 0.0);
  q.classify_enqueue(make(3, TrafficClass::NonRealTime, 0.5), 0.0);
  const auto dropped = q.expire_drops(1.0);
  CHECK(dropped.size() == 2);
  CHECK(q.dequeue_next()->id == 1);

  q.classify_enqueue(make(4, TrafficClass::RealTime, 2.0), 0.0);
  q.classify_enqueue(make(5, TrafficClass::NonRealTime, 2.0), 0.0);
  CHECK(q.expire_drops(3.0).size() == 2);
  CHECK(q.queued(TrafficClass::RealTime) + q.queued(TrafficClass::NonRealTime) == 0);
}

TEST_CASE("service is never interrupted") {
  NodeQueues q;
  q.begin_service({make(1, TrafficClass::NonRealTime, 0.1), 0, 0.5});
  q.classify_enqueue(make(2, TrafficClass::RealTime), 0.2);
  CHECK(q.expire_drops(1.0).empty());  // in-service packet is past its deadline but kept
  CHECK(q.busy());
  CHECK_THROWS(q.dequeue_next());
  CHECK_THROWS(q.begin_service({make(3, TrafficClass::RealTime), 0, 1.0}));
  CHECK(q.finish_service().packet.id == 1);
  CHECK(q.dequeue_next()->id == 2);
}

TEST_CASE("drain") {
  NodeQueues q;
  q.begin_service({make(1, TrafficClass::RealTime), 0, 0.5});
  q.classify_enqueue(make(2, TrafficClass::RealTime), 0.0);
  q.classify_enqueue(make(3, TrafficClass::NonRealTime), 0.0);
  CHECK(q.drain().size() == 3);
  CHECK_FALSE(q.busy());
}

TEST_CASE("service time") {
  energy::RadioParams radio;
  radio.bandwidth = 250000;
  Packet p = make(1, TrafficClass::RealTime);
  p.size = 100;
  CHECK(service_time(p, radio) == doctest::Approx(4e-4));
  p.size = 200;
  CHECK(service_time(p, radio) == doctest::Approx(8e-4));
}
