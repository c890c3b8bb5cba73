#include "rreed/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rreed::geometry {

Meters distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool is_allowed_neighbor(const Position& sender, const Position& candidate,
                         const Position& sink, Meters radio_range) {
  if (candidate == sender) return false;
  return distance(sender, candidate) <= radio_range &&
         distance(candidate, sink) <= distance(sender, sink);
}

double lens_area(Meters r1, Meters r2, Meters d) {
  if (d >= r1 + r2) return 0.0;
  const double rmin = std::min(r1, r2);
  if (d <= std::abs(r1 - r2)) return std::numbers::pi * rmin * rmin;
  const double c1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0);
  const double c2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0);
  const double kite =
      (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
  return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) -
         0.5 * std::sqrt(std::max(0.0, kite));
}

double allowed_area(const Position& sender, const Position& sink, Meters radio_range) {
  const Meters to_sink = distance(sender, sink);
  return lens_area(radio_range, to_sink, to_sink);
}

Meters delta(double area, std::size_t neighbor_count) {
  if (neighbor_count == 0) throw NoNeighbors();
  return std::sqrt(area / static_cast<double>(neighbor_count));
}

unsigned hops_linear(const Position& sender, const Position& sink, Meters delta) {
  const double hops = std::ceil(distance(sender, sink) / delta);
  return hops < 1.0 ? 1u : static_cast<unsigned>(hops);
}

}  // namespace rreed::geometry
