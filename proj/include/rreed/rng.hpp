#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace rreed {

using Rng = std::mt19937_64;

// Seed for the stream named `label`, derived from the master seed by
// FNV-1a over the label followed by a splitmix64 finaliser. Streams are
// independent of each other's existence, so adding one never shifts another.
std::uint64_t stream_seed(std::uint64_t master, std::string_view label);

inline Rng make_stream(std::uint64_t master, std::string_view label) {
  return Rng(stream_seed(master, label));
}

}  // namespace rreed
