#pragma once

#include <cstdint>
#include <limits>

namespace rreed {

using Seconds = double;
using Joules = double;
using Meters = double;
using Bits = std::uint32_t;
using NodeId = std::uint32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class TrafficClass : std::uint8_t { RealTime, NonRealTime };

inline const char* to_string(TrafficClass c) {
  return c == TrafficClass::RealTime ? "rt" : "nrt";
}

}  // namespace rreed
