#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bisearch/cost.hpp"
#include "bisearch/direction.hpp"

namespace bisearch {

// States are opaque 64-bit keys packed by each domain (tile permutations fit
// in 16 nibbles, maze cells in a row-major index). Engines never interpret
// them beyond equality and hashing.
using State = std::uint64_t;

struct Successor {
  State state;
  Cost cost;
};

// A state space searchable in both directions. Backward expansion generates
// predecessors but accounts arc costs in the forward driving direction, so
// asymmetric-cost spaces are supported by the same interface.
class Domain {
 public:
  virtual ~Domain() = default;

  virtual State start() const = 0;
  virtual State goal() const = 0;

  // All (child, cost) pairs reachable by one forward arc from s.
  virtual void successors(State s, std::vector<Successor>& out) const = 0;
  // All (parent, cost) pairs with an arc parent -> s; cost is the forward
  // arc cost of that arc.
  virtual void predecessors(State s, std::vector<Successor>& out) const = 0;

  // Front-to-end estimate: forward estimates the cost from s to the goal,
  // backward the cost from the start to s.
  virtual Cost heuristic(State s, Direction d) const = 0;

  // Pairwise estimate of the optimal cost of a path from `from` to `to`,
  // used by front-to-front evaluation. Domains without a natural pairwise
  // extension may leave this unimplemented.
  virtual Cost heuristic_between(State from, State to) const;

  virtual std::string format(State s) const;

  // Expansion in direction d: successors when searching forward,
  // predecessors when searching backward.
  void neighbors(State s, Direction d, std::vector<Successor>& out) const {
    if (d == Direction::kForward) {
      successors(s, out);
    } else {
      predecessors(s, out);
    }
  }

  // Root of a search in direction d and the terminal it aims at.
  State root(Direction d) const { return d == Direction::kForward ? start() : goal(); }
  State terminal(Direction d) const { return d == Direction::kForward ? goal() : start(); }
};

}  // namespace bisearch
