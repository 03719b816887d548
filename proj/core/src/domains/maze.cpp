#include "bisearch/domains/maze.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "bisearch/error.hpp"
#include "bisearch/random.hpp"

namespace bisearch {

namespace {

constexpr std::uint64_t kStartGoalSalt = 0x9E3779B97F4A7C15ull;

void carve_between(Maze& m, int a, int b) {
  const int ar = a / m.width;
  const int ac = a % m.width;
  const int br = b / m.width;
  const int bc = b % m.width;
  if (ar == br) {
    const int west = ac < bc ? a : b;
    m.walls[static_cast<std::size_t>(west)] &= static_cast<std::uint8_t>(~1u);
  } else {
    const int north = ar < br ? a : b;
    m.walls[static_cast<std::size_t>(north)] &= static_cast<std::uint8_t>(~2u);
  }
}

void pick_endpoints(Maze& m) {
  RandomSource rng(m.seed ^ kStartGoalSalt);
  const std::uint64_t cells = static_cast<std::uint64_t>(m.width) * m.height;
  m.start_cell = static_cast<int>(rng.below(cells));
  m.goal_cell = static_cast<int>(rng.below(cells));
  while (m.goal_cell == m.start_cell) {
    m.goal_cell = static_cast<int>(rng.below(cells));
  }
}

}  // namespace

std::size_t Maze::opening_count() const {
  std::size_t open = 0;
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (c + 1 < width && !wall_east(r, c)) ++open;
      if (r + 1 < height && !wall_south(r, c)) ++open;
    }
  }
  return open;
}

Maze generate_maze(int width, int height, std::uint64_t seed, int wall_skip_percent) {
  if (width < 2 || height < 2) {
    throw UsageError("maze dimensions must be at least 2x2");
  }
  if (wall_skip_percent < 0 || wall_skip_percent > 100) {
    throw UsageError("wall skip percentage must be in [0, 100]");
  }
  Maze m;
  m.width = width;
  m.height = height;
  m.seed = seed;
  m.wall_skip_percent = wall_skip_percent;
  m.walls.assign(static_cast<std::size_t>(width) * height, 3);

  RandomSource rng(seed);
  const int cells = width * height;

  // Random depth-first spanning tree.
  std::vector<bool> visited(static_cast<std::size_t>(cells), false);
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(cells));
  const int first = static_cast<int>(rng.below(static_cast<std::uint64_t>(cells)));
  visited[static_cast<std::size_t>(first)] = true;
  stack.push_back(first);
  std::vector<int> options;
  while (!stack.empty()) {
    const int cur = stack.back();
    const int r = cur / width;
    const int c = cur % width;
    options.clear();
    if (r > 0 && !visited[static_cast<std::size_t>(cur - width)]) options.push_back(cur - width);
    if (c > 0 && !visited[static_cast<std::size_t>(cur - 1)]) options.push_back(cur - 1);
    if (c + 1 < width && !visited[static_cast<std::size_t>(cur + 1)]) options.push_back(cur + 1);
    if (r + 1 < height && !visited[static_cast<std::size_t>(cur + width)]) options.push_back(cur + width);
    if (options.empty()) {
      stack.pop_back();
      continue;
    }
    const int next = options[rng.below(options.size())];
    carve_between(m, cur, next);
    visited[static_cast<std::size_t>(next)] = true;
    stack.push_back(next);
  }

  // Skip a fraction of the walls the tree construction would install.
  if (wall_skip_percent > 0) {
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        if (c + 1 < width && m.wall_east(r, c) &&
            rng.chance_percent(static_cast<std::uint64_t>(wall_skip_percent))) {
          m.walls[static_cast<std::size_t>(m.cell(r, c))] &= static_cast<std::uint8_t>(~1u);
        }
        if (r + 1 < height && m.wall_south(r, c) &&
            rng.chance_percent(static_cast<std::uint64_t>(wall_skip_percent))) {
          m.walls[static_cast<std::size_t>(m.cell(r, c))] &= static_cast<std::uint8_t>(~2u);
        }
      }
    }
  }

  pick_endpoints(m);
  return m;
}

void write_maze(std::ostream& out, const Maze& maze, bool explicit_walls) {
  out << maze.width << ' ' << maze.height << ' ' << maze.seed << ' '
      << maze.wall_skip_percent << '\n';
  if (explicit_walls) {
    for (int r = 0; r < maze.height; ++r) {
      for (int c = 0; c < maze.width; ++c) {
        out << "0123"[maze.walls[static_cast<std::size_t>(maze.cell(r, c))] & 3];
      }
      out << '\n';
    }
  }
}

Maze read_maze(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw IoError("maze file is empty");
  }
  std::istringstream hs(header);
  int width = 0;
  int height = 0;
  std::uint64_t seed = 0;
  int skip = 0;
  if (!(hs >> width >> height >> seed >> skip)) {
    throw IoError("maze header must be 'W H seed skip%'");
  }
  std::string row;
  std::vector<std::string> rows;
  while (std::getline(in, row)) {
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    rows.push_back(row);
  }
  if (rows.empty()) {
    return generate_maze(width, height, seed, skip);
  }
  if (static_cast<int>(rows.size()) != height) {
    throw IoError("maze wall section must have exactly H rows");
  }
  Maze m;
  m.width = width;
  m.height = height;
  m.seed = seed;
  m.wall_skip_percent = skip;
  m.walls.assign(static_cast<std::size_t>(width) * height, 3);
  for (int r = 0; r < height; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != width) {
      throw IoError("maze wall row " + std::to_string(r + 1) + " has wrong length");
    }
    for (int c = 0; c < width; ++c) {
      const char ch = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (ch < '0' || ch > '3') {
        throw IoError("maze wall row " + std::to_string(r + 1) + " has invalid digit");
      }
      m.walls[static_cast<std::size_t>(m.cell(r, c))] = static_cast<std::uint8_t>(ch - '0');
    }
  }
  pick_endpoints(m);
  return m;
}

MazeDomain::MazeDomain(Maze maze) : maze_(std::move(maze)) {}

void MazeDomain::successors(State s, std::vector<Successor>& out) const {
  out.clear();
  const int cell = static_cast<int>(s);
  const int r = cell / maze_.width;
  const int c = cell % maze_.width;
  // Fixed order: up, left, right, down.
  if (r > 0 && !maze_.wall_south(r - 1, c)) {
    out.push_back(Successor{static_cast<State>(cell - maze_.width), 1});
  }
  if (c > 0 && !maze_.wall_east(r, c - 1)) {
    out.push_back(Successor{static_cast<State>(cell - 1), 1});
  }
  if (c + 1 < maze_.width && !maze_.wall_east(r, c)) {
    out.push_back(Successor{static_cast<State>(cell + 1), 1});
  }
  if (r + 1 < maze_.height && !maze_.wall_south(r, c)) {
    out.push_back(Successor{static_cast<State>(cell + maze_.width), 1});
  }
}

void MazeDomain::predecessors(State s, std::vector<Successor>& out) const {
  successors(s, out);  // undirected grid
}

Cost MazeDomain::heuristic(State s, Direction d) const {
  return heuristic_between(s, d == Direction::kForward ? goal() : start());
}

Cost MazeDomain::heuristic_between(State from, State to) const {
  const int a = static_cast<int>(from);
  const int b = static_cast<int>(to);
  const int dr = a / maze_.width - b / maze_.width;
  const int dc = a % maze_.width - b % maze_.width;
  return std::abs(dr) + std::abs(dc);
}

std::string MazeDomain::format(State s) const {
  const int cell = static_cast<int>(s);
  return "(" + std::to_string(cell / maze_.width) + "," +
         std::to_string(cell % maze_.width) + ")";
}

}  // namespace bisearch
