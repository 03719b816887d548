#pragma once

#include <optional>
#include <unordered_map>

#include "bisearch/cost.hpp"
#include "bisearch/domain.hpp"

namespace bisearch {

struct NodeInfo {
  Cost g = 0;
  State parent = 0;
  bool has_parent = false;
};

// Hash-addressed map from state to its best known g and parent link.
// With a consistent heuristic a closed state's g is optimal.
class ClosedSet {
 public:
  bool contains(State s) const { return map_.find(s) != map_.end(); }

  const NodeInfo* find(State s) const {
    auto it = map_.find(s);
    return it == map_.end() ? nullptr : &it->second;
  }

  void insert(State s, const NodeInfo& info) { map_[s] = info; }

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }

  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

 private:
  std::unordered_map<State, NodeInfo> map_;
};

}  // namespace bisearch
