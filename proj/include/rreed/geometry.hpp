#pragma once

#include <stdexcept>
#include <vector>

#include "rreed/units.hpp"

namespace rreed::geometry {

struct Position {
  Meters x = 0.0;
  Meters y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

struct Topology {
  std::vector<Position> positions;  // indexed by node id
  NodeId sink = 0;
  Meters radio_range = 0.0;
};

class NoNeighbors : public std::domain_error {
 public:
  NoNeighbors() : std::domain_error("no neighbors in allowed area") {}
};

Meters distance(const Position& a, const Position& b);

/// Candidate lies within radio range of the sender and no farther from the
/// sink than the sender is.
bool is_allowed_neighbor(const Position& sender, const Position& candidate,
                         const Position& sink, Meters radio_range);

/// Area of the intersection of two disks with radii r1, r2 whose centres are
/// `centre_distance` apart.
double lens_area(Meters r1, Meters r2, Meters centre_distance);

/// Area of the region in which allowed neighbors of `sender` can lie: the
/// sender's radio disk intersected with the sink-centred disk through the sender.
double allowed_area(const Position& sender, const Position& sink, Meters radio_range);

/// Mean neighbor spacing sqrt(area / neighbor_count). Throws NoNeighbors.
Meters delta(double area, std::size_t neighbor_count);

/// Estimated hop count to the sink, ceil(dist / delta), at least 1.
unsigned hops_linear(const Position& sender, const Position& sink, Meters delta);

}  // namespace rreed::geometry
