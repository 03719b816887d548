#pragma once

#include <cstdint>
#include <vector>

#include "bisearch/cost.hpp"
#include "bisearch/domain.hpp"

namespace bisearch {

// One improving complete path event: how many nodes had been generated when
// the path of this cost was first known.
struct LminEvent {
  std::uint64_t nodes_generated;
  Cost cost;
};

struct Solution {
  std::vector<State> path;  // start .. goal
  Cost cost = 0;
  bool optimal = false;
  std::vector<LminEvent> l_min_history;
};

}  // namespace bisearch
