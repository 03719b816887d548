#pragma once

#include <unordered_map>
#include <vector>

#include "bisearch/domain.hpp"
#include "bisearch/error.hpp"

namespace bisearch {

// Hand-built graph domain for constructed instances (bound checks, probe
// asymmetry cases, termination edge cases). Heuristic values default to 0.
class ExplicitGraphDomain : public Domain {
 public:
  ExplicitGraphDomain(State start, State goal) : start_(start), goal_(goal) {}

  void add_arc(State from, State to, Cost cost) {
    fwd_[from].push_back(Successor{to, cost});
    bwd_[to].push_back(Successor{from, cost});
  }

  void add_undirected(State a, State b, Cost cost) {
    add_arc(a, b, cost);
    add_arc(b, a, cost);
  }

  void set_h(State s, Direction d, Cost value) { h_[dir_index(d)][s] = value; }

  State start() const override { return start_; }
  State goal() const override { return goal_; }

  void successors(State s, std::vector<Successor>& out) const override {
    out.clear();
    auto it = fwd_.find(s);
    if (it != fwd_.end()) out = it->second;
  }

  void predecessors(State s, std::vector<Successor>& out) const override {
    out.clear();
    auto it = bwd_.find(s);
    if (it != bwd_.end()) out = it->second;
  }

  Cost heuristic(State s, Direction d) const override {
    auto it = h_[dir_index(d)].find(s);
    return it == h_[dir_index(d)].end() ? 0 : it->second;
  }

 private:
  State start_;
  State goal_;
  std::unordered_map<State, std::vector<Successor>> fwd_;
  std::unordered_map<State, std::vector<Successor>> bwd_;
  std::unordered_map<State, Cost> h_[2];
};

}  // namespace bisearch
