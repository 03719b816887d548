#pragma once

#include <vector>

#include "bisearch/cost.hpp"
#include "bisearch/domain.hpp"
#include "bisearch/search_tree.hpp"
#include "bisearch/solution.hpp"

namespace bisearch {

// Termination test for alternating bidirectional search: the best complete
// path found so far can no longer be beaten once its cost is at most the
// larger of the two frontier minima. An infinite l_min (no complete path yet)
// never satisfies the condition.
constexpr bool termination_met(Cost l_min, Cost fmin1, Cost fmin2) {
  if (!is_finite(l_min)) return false;
  const Cost bound = fmin1 > fmin2 ? fmin1 : fmin2;
  return l_min <= bound;
}

// Joins the forward path to `meeting` with the reversed backward parent
// chain. Cost is g1(meeting) + g2(meeting) as stored in the two trees.
// Throws InvariantViolation when either tree lacks the meeting state.
Solution reconstruct_path(State meeting, const SearchTree& forward_tree,
                          const SearchTree& backward_tree);

struct ConsistencyViolation {
  State from;
  State to;
  Direction direction;
  Cost lhs;  // h_d of the violating endpoint
  Cost rhs;  // h_d of the other endpoint plus the arc cost
};

// Checks h_d(m) <= h_d(n) + k_d(m, n) over every forward arc leaving the
// given states, in both directions. Violations are reported, not thrown.
std::vector<ConsistencyViolation> check_consistency(
    const Domain& domain, const std::vector<State>& states);

// True when the path starts at the domain start, ends at the goal, follows
// domain arcs, and its arc costs sum to `solution.cost`.
bool validate_solution(const Domain& domain, const Solution& solution);

}  // namespace bisearch
