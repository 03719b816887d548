#pragma once

#include <cstddef>

namespace bisearch {

// Search direction. Forward searches run from the start node toward the goal,
// backward searches from the goal toward the start along reversed arcs.
enum class Direction : unsigned char { kForward = 0, kBackward = 1 };

constexpr Direction reverse(Direction d) {
  return d == Direction::kForward ? Direction::kBackward : Direction::kForward;
}

constexpr std::size_t dir_index(Direction d) {
  return static_cast<std::size_t>(d);
}

constexpr const char* dir_name(Direction d) {
  return d == Direction::kForward ? "forward" : "backward";
}

}  // namespace bisearch
