#pragma once

// Reference computations that share no code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

struct PriorityWaits {
  double rt = 0.0;
  double nrt = 0.0;
  std::uint64_t rt_count = 0;
  std::uint64_t nrt_count = 0;
};

// Single non-preemptive server, deterministic service, two Poisson classes.
// Class 0 has strict priority. Mean waits over the first `packets` arrivals
// after discarding `warmup` of them.
inline PriorityWaits simulate_priority_md1(double rate_hi, double rate_lo, double service,
                                           std::uint64_t packets, std::uint64_t warmup,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto exp = [&](double rate) {
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    return -std::log(1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng)) / rate;
  };
  double next_hi = exp(rate_hi), next_lo = exp(rate_lo);
  std::deque<std::pair<double, std::uint64_t>> q_hi, q_lo;  // arrival time, sequence
  double server_free = 0.0;
  std::uint64_t seq = 0;
  PriorityWaits out;
  double sum_hi = 0.0, sum_lo = 0.0;

  auto serve_until = [&](double t) {
    // Start every service that begins strictly before t.
    constexpr double inf = std::numeric_limits<double>::infinity();
    while (!q_hi.empty() || !q_lo.empty()) {
      const double earliest = std::min(q_hi.empty() ? inf : q_hi.front().first,
                                       q_lo.empty() ? inf : q_lo.front().first);
      const double start = std::max(server_free, earliest);
      if (start >= t) return;
      const bool take_hi = !q_hi.empty() && q_hi.front().first <= start;
      auto& q = take_hi ? q_hi : q_lo;
      const auto [arrival, s] = q.front();
      q.pop_front();
      if (s >= warmup) {
        if (take_hi) {
          sum_hi += start - arrival;
          ++out.rt_count;
        } else {
          sum_lo += start - arrival;
          ++out.nrt_count;
        }
      }
      server_free = start + service;
    }
  };

  while (seq < packets + warmup) {
    const bool hi = next_hi <= next_lo;
    const double t = hi ? next_hi : next_lo;
    serve_until(t);
    (hi ? q_hi : q_lo).emplace_back(t, seq++);
    if (hi) next_hi = t + exp(rate_hi);
    else next_lo = t + exp(rate_lo);
  }
  serve_until(std::numeric_limits<double>::infinity());
  out.rt = out.rt_count ? sum_hi / out.rt_count : 0.0;
  out.nrt = out.nrt_count ? sum_lo / out.nrt_count : 0.0;
  return out;
}

// Monte-Carlo area of {p : |p - c1| <= r1 and |p - c2| <= r2}, sampling the
// overlap of the two disks' bounding boxes.
inline double lens_area_mc(double c1x, double c1y, double r1, double c2x, double c2y, double r2,
                           std::uint64_t samples, std::uint64_t seed) {
  const double x0 = std::max(c1x - r1, c2x - r2), x1 = std::min(c1x + r1, c2x + r2);
  const double y0 = std::max(c1y - r1, c2y - r2), y1 = std::min(c1y + r1, c2y + r2);
  if (x0 >= x1 || y0 >= y1) return 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double x = ux(rng), y = uy(rng);
    const double d1 = (x - c1x) * (x - c1x) + (y - c1y) * (y - c1y);
    const double d2 = (x - c2x) * (x - c2x) + (y - c2y) * (y - c2y);
    if (d1 <= r1 * r1 && d2 <= r2 * r2) ++hits;
  }
  return (x1 - x0) * (y1 - y0) * static_cast<double>(hits) / static_cast<double>(samples);
}

struct Candidate {
  std::uint32_t id;
  double cost;  // +inf for unusable
};

// Exhaustive scan: smallest finite cost, ties to the smallest id.
inline std::optional<std::uint32_t> argmin(const std::vector<Candidate>& cs) {
  std::optional<std::uint32_t> best;
  for (const auto& a : cs) {
    if (!std::isfinite(a.cost)) continue;
    bool beaten = false;
    for (const auto& b : cs) {
      if (!std::isfinite(b.cost)) continue;
      if (b.cost < a.cost || (b.cost == a.cost && b.id < a.id)) beaten = true;
    }
    if (!beaten) best = a.id;
  }
  return best;
}

}  // namespace oracle
