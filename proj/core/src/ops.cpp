#include "bisearch/ops.hpp"

#include <algorithm>

#include "bisearch/error.hpp"
#include "bisearch/ticker.hpp"

namespace bisearch {

thread_local std::chrono::steady_clock::time_point ScopedDeadline::deadline_{};
thread_local std::chrono::steady_clock::time_point ScopedDeadline::previous_{};
thread_local bool ScopedDeadline::active_ = false;

Cost Domain::heuristic_between(State, State) const {
  throw InvariantViolation("domain has no pairwise heuristic");
}

std::string Domain::format(State s) const {
  return std::to_string(s);
}

namespace {

// Chain from `from` back to the tree root, front() == from, back() == root.
std::vector<State> chain_to_root(State from, const SearchTree& tree) {
  std::vector<State> chain{from};
  State cur = from;
  State parent;
  while (tree.parent_of(cur, parent)) {
    chain.push_back(parent);
    cur = parent;
  }
  return chain;
}

}  // namespace

Solution reconstruct_path(State meeting, const SearchTree& forward_tree,
                          const SearchTree& backward_tree) {
  const auto g1 = forward_tree.g_of(meeting);
  const auto g2 = backward_tree.g_of(meeting);
  BISEARCH_CHECK(g1.has_value(), "meeting state missing from the forward tree");
  BISEARCH_CHECK(g2.has_value(), "meeting state missing from the backward tree");

  std::vector<State> fwd = chain_to_root(meeting, forward_tree);
  std::reverse(fwd.begin(), fwd.end());  // start .. meeting
  std::vector<State> bwd = chain_to_root(meeting, backward_tree);  // meeting .. goal

  Solution sol;
  sol.path = std::move(fwd);
  sol.path.insert(sol.path.end(), bwd.begin() + 1, bwd.end());
  sol.cost = cost_add(*g1, *g2);
  return sol;
}

std::vector<ConsistencyViolation> check_consistency(
    const Domain& domain, const std::vector<State>& states) {
  std::vector<ConsistencyViolation> out;
  std::vector<Successor> succ;
  for (State m : states) {
    domain.successors(m, succ);
    for (const Successor& arc : succ) {
      const State n = arc.state;
      // Forward: h1(m) <= h1(n) + k(m, n).
      const Cost h1m = domain.heuristic(m, Direction::kForward);
      const Cost h1n = domain.heuristic(n, Direction::kForward);
      if (h1m > cost_add(h1n, arc.cost)) {
        out.push_back({m, n, Direction::kForward, h1m, cost_add(h1n, arc.cost)});
      }
      // Backward: h2(n) <= h2(m) + k(m, n).
      const Cost h2m = domain.heuristic(m, Direction::kBackward);
      const Cost h2n = domain.heuristic(n, Direction::kBackward);
      if (h2n > cost_add(h2m, arc.cost)) {
        out.push_back({n, m, Direction::kBackward, h2n, cost_add(h2m, arc.cost)});
      }
    }
  }
  return out;
}

bool validate_solution(const Domain& domain, const Solution& solution) {
  if (solution.path.empty()) return false;
  if (solution.path.front() != domain.start()) return false;
  if (solution.path.back() != domain.goal()) return false;
  Cost total = 0;
  std::vector<Successor> succ;
  for (std::size_t i = 0; i + 1 < solution.path.size(); ++i) {
    domain.successors(solution.path[i], succ);
    bool found = false;
    for (const Successor& arc : succ) {
      if (arc.state == solution.path[i + 1]) {
        total = cost_add(total, arc.cost);
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return total == solution.cost;
}

}  // namespace bisearch
