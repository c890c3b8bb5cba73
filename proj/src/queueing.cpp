#include "rreed/queueing.hpp"

#include <cmath>

namespace rreed::queueing {

void validate(const ClassLoad& load) {
  if (!(load.arrival_rate >= 0.0)) throw std::invalid_argument("arrival rate must be >= 0");
  if (!(load.mean_service > 0.0)) throw std::invalid_argument("mean service time must be > 0");
  // Small slack for E[X^2] computed as X*X.
  if (load.second_moment_service <
      load.mean_service * load.mean_service * (1.0 - 1e-12)) {
    throw std::invalid_argument("second moment below squared mean");
  }
}

double utilization(const ClassLoad& load) { return load.arrival_rate * load.mean_service; }

Seconds mean_residual(const QueueModelParams& params) {
  return 0.5 * (params.rt.arrival_rate * params.rt.second_moment_service +
                params.nrt.arrival_rate * params.nrt.second_moment_service);
}

Seconds wait_rt(const QueueModelParams& params) {
  const double rho1 = utilization(params.rt);
  if (rho1 >= 1.0) throw UnstableQueue(rho1);
  return mean_residual(params) / (1.0 - rho1);
}

Seconds wait_nrt(const QueueModelParams& params) {
  const double rho1 = utilization(params.rt);
  const double rho = rho1 + utilization(params.nrt);
  if (rho >= 1.0) throw UnstableQueue(rho);
  return mean_residual(params) / ((1.0 - rho1) * (1.0 - rho));
}

Seconds wait_for(TrafficClass cls, const QueueModelParams& params) {
  return cls == TrafficClass::RealTime ? wait_rt(params) : wait_nrt(params);
}

bool is_stable(TrafficClass cls, const QueueModelParams& params) {
  const double rho1 = utilization(params.rt);
  if (cls == TrafficClass::RealTime) return rho1 < 1.0;
  return rho1 + utilization(params.nrt) < 1.0;
}

}  // namespace rreed::queueing
