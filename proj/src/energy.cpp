#include "rreed/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rreed::energy {

void validate(const RadioParams& radio) {
  if (!(radio.e_elec > 0.0) || !(radio.eps_fs > 0.0) || !(radio.eps_amp > 0.0) ||
      !(radio.bandwidth > 0.0)) {
    throw std::invalid_argument("radio parameters must be strictly positive");
  }
}

Meters crossover_distance(const RadioParams& radio) {
  return std::sqrt(radio.eps_fs / radio.eps_amp);
}

Joules tx_energy(Bits k, Meters d, const RadioParams& radio) {
  const double bits = static_cast<double>(k);
  const Joules electronics = bits * radio.e_elec;
  if (d < crossover_distance(radio)) return electronics + bits * radio.eps_fs * d * d;
  const double d2 = d * d;
  return electronics + bits * radio.eps_amp * d2 * d2;
}

Joules rx_energy(Bits k, const RadioParams& radio) {
  return static_cast<double>(k) * radio.e_elec;
}

Battery::Battery(Joules initial) : residual_(initial), initial_(initial) {
  if (!(initial >= 0.0)) throw std::invalid_argument("initial energy must be >= 0");
}

Battery Battery::mains() {
  Battery b(0.0);
  b.residual_ = b.initial_ = std::numeric_limits<double>::infinity();
  b.unlimited_ = true;
  return b;
}

DebitStatus Battery::debit(Joules amount, Joules* drawn) {
  if (!(amount >= 0.0)) throw std::invalid_argument("debit amount must be >= 0");
  if (unlimited_) {
    if (drawn) *drawn = 0.0;
    return DebitStatus::Ok;
  }
  if (dead_) {
    if (drawn) *drawn = 0.0;
    return DebitStatus::Dead;
  }
  if (amount > residual_) {
    if (drawn) *drawn = residual_;
    residual_ = 0.0;
    dead_ = true;
    return DebitStatus::Dead;
  }
  residual_ -= amount;
  if (drawn) *drawn = amount;
  return DebitStatus::Ok;
}

}  // namespace rreed::energy
