#include "rreed/link_estimation.hpp"

#include <stdexcept>

namespace rreed::link {

LinkStats::LinkStats(std::size_t window) : ring_(window, false) {
  if (window == 0) throw std::invalid_argument("PRR window must be positive");
}

void LinkStats::record_outcome(bool delivered) {
  if (sent_ == ring_.size()) {
    // Full: the slot at head_ holds the oldest outcome.
    if (ring_[head_]) --received_;
    --sent_;
  }
  ring_[head_] = delivered;
  head_ = (head_ + 1) % ring_.size();
  ++sent_;
  if (delivered) ++received_;
}

double LinkStats::prr() const {
  if (sent_ == 0) return 1.0;
  return static_cast<double>(received_) / static_cast<double>(sent_);
}

}  // namespace rreed::link
