#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rreed/geometry.hpp"

using namespace rreed::geometry;

TEST_CASE("distance") {
  CHECK(distance({0, 0}, {0, 0}) == 0.0);
  CHECK(distance({0, 0}, {3, 4}) == 5.0);
  CHECK(distance({0, 0}, {1000, 1000}) == doctest::Approx(1414.2136));
  CHECK(distance({1, 2}, {7, -3}) == distance({7, -3}, {1, 2}));
}

TEST_CASE("allowed neighbor") {
  const Position sink{0, 0}, sender{50, 0};
  CHECK(is_allowed_neighbor(sender, sink, sink, 60));
  CHECK_FALSE(is_allowed_neighbor(sender, {70, 0}, sink, 60));
  CHECK_FALSE(is_allowed_neighbor({200, 0}, {100, 0}, sink, 60));
  CHECK_FALSE(is_allowed_neighbor(sender, sender, sink, 60));
  // Equal distance to the sink is still allowed.
  CHECK(is_allowed_neighbor(sender, {0, 50}, sink, 80));
}

TEST_CASE("lens and allowed area") {
  CHECK(allowed_area({10, 0}, {0, 0}, 20) == doctest::Approx(std::numbers::pi * 100));
  CHECK(allowed_area({10, 0}, {0, 0}, 25) == doctest::Approx(std::numbers::pi * 100));
  CHECK(lens_area(3, 3, 0) == doctest::Approx(std::numbers::pi * 9));
  CHECK(lens_area(1, 1, 1) == doctest::Approx(2 * std::numbers::pi / 3 - std::sqrt(3.0) / 2));
  CHECK(lens_area(1, 1, 1) == doctest::Approx(1.2284).epsilon(1e-4));
  CHECK(lens_area(1, 1, 2.5) == 0.0);
  // Radio disk inside the sink disk.
  CHECK(allowed_area({100, 0}, {0, 0}, 0.0) == 0.0);
}

TEST_CASE("lens area matches sampling") {
  CHECK(oracle::lens_area_mc(0, 0, 1, 1, 0, 1, 400000, 5) ==
        doctest::Approx(lens_area(1, 1, 1)).epsilon(0.01));
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1000.0), r(20.0, 200.0);
  for (int i = 0; i < 5; ++i) {
    const Position sender{u(rng), u(rng)}, sink{u(rng), u(rng)};
    const double range = r(rng);
    const double d = distance(sender, sink);
    const double mc =
        oracle::lens_area_mc(sender.x, sender.y, range, sink.x, sink.y, d, 400000, 100 + i);
    CHECK(mc == doctest::Approx(allowed_area(sender, sink, range)).epsilon(0.01));
  }
}

TEST_CASE("allowed neighbors fall inside the lens") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 300.0);
  const Position sink{150, 150};
  for (int trial = 0; trial < 2000; ++trial) {
    const Position sender{u(rng), u(rng)}, cand{u(rng), u(rng)};
    if (!is_allowed_neighbor(sender, cand, sink, 80.0)) continue;
    CHECK(distance(cand, sender) <= 80.0);
    CHECK(distance(cand, sink) <= distance(sender, sink));
  }
}

TEST_CASE("delta and linear hop estimate") {
  CHECK(delta(100, 4) == 5.0);
  CHECK(delta(100, 1) == 10.0);
  CHECK(delta(1.2284, 3) == doctest::Approx(0.640).epsilon(1e-3));
  CHECK_THROWS_AS(delta(100, 0), NoNeighbors);

  CHECK(hops_linear({50, 0}, {0, 0}, 5) == 10);
  CHECK(hops_linear({50, 0}, {0, 0}, 7) == 8);
  CHECK(hops_linear({3, 0}, {0, 0}, 7) == 1);
  CHECK(hops_linear({0, 0}, {0, 0}, 7) == 1);
}
