#pragma once

#include <cstddef>
#include <vector>

namespace rreed::link {

inline constexpr std::size_t kDefaultWindow = 100;

// Packet reception rate over the last `window` transmissions on one directed
// link. A link that has never been used reports 1.0.
class LinkStats {
 public:
  explicit LinkStats(std::size_t window = kDefaultWindow);

  void record_outcome(bool delivered);
  double prr() const;

  std::size_t window_size() const { return ring_.size(); }
  std::size_t sent_count() const { return sent_; }
  std::size_t received_count() const { return received_; }

 private:
  std::vector<bool> ring_;
  std::size_t head_ = 0;
  std::size_t sent_ = 0;
  std::size_t received_ = 0;
};

}  // namespace rreed::link
