#pragma once

#include <array>
#include <string>
#include <vector>

#include "bisearch/domain.hpp"
#include "bisearch/random.hpp"

namespace bisearch {

// Sliding-tile puzzle on an n x n board (n = 3 or 4). A state packs the tile
// value of each board position into one nibble, row-major from the top left;
// 0 is the blank. The goal is the identity arrangement with the blank in the
// top-left corner.
class PuzzleDomain : public Domain {
 public:
  PuzzleDomain(int n, State start);

  static State pack(const std::vector<int>& tiles);
  static std::vector<int> unpack(int n, State s);

  static bool is_permutation(int n, const std::vector<int>& tiles);
  // Reachability of `tiles` from the identity goal (parity argument).
  static bool is_solvable(int n, const std::vector<int>& tiles);

  static State goal_state(int n);

  // Uniform random solvable instance; parity is repaired by swapping the
  // first two non-blank tiles when needed.
  static State random_state(int n, RandomSource& rng);

  // Parses one instance line of n*n whitespace-separated integers.
  // Throws IoError naming the problem when the line is not a valid state.
  static State parse_line(int n, const std::string& line);

  int n() const { return n_; }

  State start() const override { return start_; }
  State goal() const override { return goal_; }
  void successors(State s, std::vector<Successor>& out) const override;
  void predecessors(State s, std::vector<Successor>& out) const override;
  Cost heuristic(State s, Direction d) const override;
  Cost heuristic_between(State from, State to) const override;
  std::string format(State s) const override;

 private:
  void moves_from(State s, std::vector<Successor>& out) const;

  int n_;
  int cells_;
  State start_;
  State goal_;
  // manhattan_to_goal_[pos][tile], manhattan_to_start_[pos][tile]
  std::array<std::array<Cost, 16>, 16> to_goal_;
  std::array<std::array<Cost, 16>, 16> to_start_;
};

}  // namespace bisearch
