#pragma once

#include "rreed/units.hpp"

namespace rreed::energy {

/// First-order radio model constants, SI units.
struct RadioParams {
  double e_elec = 50e-9;      // J/bit
  double eps_fs = 10e-12;     // J/bit/m^2
  double eps_amp = 0.0013e-12;  // J/bit/m^4
  double bandwidth = 250000;  // bit/s
};

void validate(const RadioParams& radio);

/// Distance at which the free-space and multipath amplifier terms meet.
Meters crossover_distance(const RadioParams& radio);

/// Energy to transmit `k` bits over `d` metres. The d^4 branch applies for d >= d0.
Joules tx_energy(Bits k, Meters d, const RadioParams& radio);

Joules rx_energy(Bits k, const RadioParams& radio);

enum class DebitStatus { Ok, Dead };

class Battery {
 public:
  explicit Battery(Joules initial);

  /// Unlimited supply; debits never fail and are not accounted.
  static Battery mains();

  /// Removes `amount` joules. When the battery cannot cover it the residual
  /// clamps to zero and Dead is returned. Returns the joules actually drawn
  /// through `drawn` so ledgers can stay closed.
  DebitStatus debit(Joules amount, Joules* drawn = nullptr);

  Joules residual() const { return residual_; }
  Joules initial() const { return initial_; }
  bool dead() const { return dead_; }
  bool unlimited() const { return unlimited_; }

 private:
  Joules residual_;
  Joules initial_;
  bool dead_ = false;
  bool unlimited_ = false;
};

}  // namespace rreed::energy
