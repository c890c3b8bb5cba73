#pragma once

#include <stdexcept>

#include "rreed/units.hpp"

namespace rreed::queueing {

/// Load offered by one traffic class to a single server.
struct ClassLoad {
  double arrival_rate = 0.0;        // packets/s
  Seconds mean_service = 1.0;       // E[X]
  double second_moment_service = 1.0;  // E[X^2], s^2

  /// Deterministic service of length `service`.
  static ClassLoad deterministic(double rate, Seconds service) {
    return {rate, service, service * service};
  }
};

/// Two-class non-preemptive priority server. `rt` is served first.
struct QueueModelParams {
  ClassLoad rt;
  ClassLoad nrt;
};

/// Raised when the offered load reaches the stability boundary.
class UnstableQueue : public std::domain_error {
 public:
  explicit UnstableQueue(double load)
      : std::domain_error("queue unstable: utilization >= 1"), load_(load) {}
  double load() const noexcept { return load_; }

 private:
  double load_;
};

/// Throws std::invalid_argument if the load violates its invariants.
void validate(const ClassLoad& load);

double utilization(const ClassLoad& load);

/// Mean residual service time seen by an arrival: R = 1/2 * sum(lambda_i * E[X_i^2]).
Seconds mean_residual(const QueueModelParams& params);

/// Mean wait of the high-priority class, R / (1 - rho1).
Seconds wait_rt(const QueueModelParams& params);

/// Mean wait of the low-priority class, R / ((1 - rho1)(1 - rho1 - rho2)).
Seconds wait_nrt(const QueueModelParams& params);

/// Dispatches to wait_rt or wait_nrt.
Seconds wait_for(TrafficClass cls, const QueueModelParams& params);

/// True when the waiting time of `cls` is finite.
bool is_stable(TrafficClass cls, const QueueModelParams& params);

}  // namespace rreed::queueing
