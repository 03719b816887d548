#pragma once

#include <cstdint>
#include <limits>

namespace bisearch {

// Exact integer arc/path costs. Both benchmark domains are unit-cost, so no
// floating point is involved anywhere in the termination comparisons.
// Real-valued domains must map their costs onto an exact integer grid.
using Cost = std::int64_t;

// Sentinel strictly greater than any finite cost, absorbing under addition.
// Kept well below INT64_MAX so sums of a few sentinels cannot wrap.
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 4;

constexpr bool is_finite(Cost c) {
  return c < kInfiniteCost;
}

constexpr Cost cost_add(Cost a, Cost b) {
  if (a >= kInfiniteCost || b >= kInfiniteCost) {
    return kInfiniteCost;
  }
  return a + b;
}

}  // namespace bisearch
