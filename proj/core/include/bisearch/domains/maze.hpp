#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bisearch/domain.hpp"

namespace bisearch {

// Randomized maze on a 4-connected W x H grid. Generation carves a random
// depth-first spanning tree and then skips (removes) each remaining wall with
// the given percentage, which produces the transposition-rich grids used by
// the benchmarks. Everything is a pure function of (width, height, seed,
// wall_skip_percent).
struct Maze {
  int width = 0;
  int height = 0;
  std::uint64_t seed = 0;
  int wall_skip_percent = 0;
  // Two bits per cell: bit 0 = wall to the east, bit 1 = wall to the south.
  std::vector<std::uint8_t> walls;
  int start_cell = 0;
  int goal_cell = 0;

  int cell(int row, int col) const { return row * width + col; }
  bool wall_east(int row, int col) const {
    return walls[static_cast<std::size_t>(cell(row, col))] & 1;
  }
  bool wall_south(int row, int col) const {
    return walls[static_cast<std::size_t>(cell(row, col))] & 2;
  }
  // Count of removed internal walls (carved openings).
  std::size_t opening_count() const;
};

// Deterministic maze construction; throws UsageError on degenerate sizes.
Maze generate_maze(int width, int height, std::uint64_t seed, int wall_skip_percent = 3);

// Text format: header "W H seed skip%", optionally followed by H rows of W
// hex digits (bit 0 = east wall, bit 1 = south wall). Seed-only files
// regenerate the same maze; start/goal always derive from the seed.
void write_maze(std::ostream& out, const Maze& maze, bool explicit_walls);
Maze read_maze(std::istream& in);

class MazeDomain : public Domain {
 public:
  explicit MazeDomain(Maze maze);

  const Maze& maze() const { return maze_; }

  State start() const override { return static_cast<State>(maze_.start_cell); }
  State goal() const override { return static_cast<State>(maze_.goal_cell); }
  void successors(State s, std::vector<Successor>& out) const override;
  void predecessors(State s, std::vector<Successor>& out) const override;
  Cost heuristic(State s, Direction d) const override;
  Cost heuristic_between(State from, State to) const override;
  std::string format(State s) const override;

 private:
  Maze maze_;
};

}  // namespace bisearch
