#include "bisearch/domains/puzzle.hpp"

#include <sstream>

#include "bisearch/error.hpp"

namespace bisearch {

namespace {

inline int tile_at(State s, int pos) {
  return static_cast<int>((s >> (4 * pos)) & 0xF);
}

inline State with_tile(State s, int pos, int tile) {
  const State mask = State{0xF} << (4 * pos);
  return (s & ~mask) | (State{static_cast<unsigned>(tile)} << (4 * pos));
}

inline int find_blank(State s, int cells) {
  for (int i = 0; i < cells; ++i) {
    if (tile_at(s, i) == 0) return i;
  }
  throw InvariantViolation("puzzle state without a blank");
}

int permutation_parity(const std::vector<int>& tiles) {
  const int n = static_cast<int>(tiles.size());
  std::vector<bool> seen(n, false);
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = tiles[j];
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity;
}

}  // namespace

PuzzleDomain::PuzzleDomain(int n, State start)
    : n_(n), cells_(n * n), start_(start), goal_(goal_state(n)) {
  BISEARCH_CHECK(n == 3 || n == 4, "supported board sizes are 3x3 and 4x4");
  std::vector<int> tiles = unpack(n, start);
  BISEARCH_CHECK(is_permutation(n, tiles), "start state is not a permutation");
  BISEARCH_CHECK(is_solvable(n, tiles), "start state is not reachable from the goal");

  std::array<int, 16> start_pos_of{};
  for (int pos = 0; pos < cells_; ++pos) {
    start_pos_of[static_cast<std::size_t>(tiles[pos])] = pos;
  }
  for (int pos = 0; pos < cells_; ++pos) {
    for (int tile = 0; tile < cells_; ++tile) {
      const int gp = tile;  // identity goal
      const int sp = start_pos_of[static_cast<std::size_t>(tile)];
      to_goal_[pos][tile] =
          std::abs(pos / n_ - gp / n_) + std::abs(pos % n_ - gp % n_);
      to_start_[pos][tile] =
          std::abs(pos / n_ - sp / n_) + std::abs(pos % n_ - sp % n_);
    }
  }
}

State PuzzleDomain::pack(const std::vector<int>& tiles) {
  State s = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    s |= State{static_cast<unsigned>(tiles[i])} << (4 * i);
  }
  return s;
}

std::vector<int> PuzzleDomain::unpack(int n, State s) {
  std::vector<int> tiles(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n * n; ++i) {
    tiles[static_cast<std::size_t>(i)] = tile_at(s, i);
  }
  return tiles;
}

bool PuzzleDomain::is_permutation(int n, const std::vector<int>& tiles) {
  const int cells = n * n;
  if (static_cast<int>(tiles.size()) != cells) return false;
  std::vector<bool> seen(static_cast<std::size_t>(cells), false);
  for (int t : tiles) {
    if (t < 0 || t >= cells || seen[static_cast<std::size_t>(t)]) return false;
    seen[static_cast<std::size_t>(t)] = true;
  }
  return true;
}

bool PuzzleDomain::is_solvable(int n, const std::vector<int>& tiles) {
  // Each blank move is one transposition of the arrangement and changes the
  // blank's Manhattan distance from its goal corner by one, so both parities
  // stay in lockstep on the reachable component.
  int blank = 0;
  for (int i = 0; i < n * n; ++i) {
    if (tiles[static_cast<std::size_t>(i)] == 0) blank = i;
  }
  const int blank_dist = blank / n + blank % n;
  return permutation_parity(tiles) == (blank_dist & 1);
}

State PuzzleDomain::goal_state(int n) {
  std::vector<int> tiles(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n * n; ++i) tiles[static_cast<std::size_t>(i)] = i;
  return pack(tiles);
}

State PuzzleDomain::random_state(int n, RandomSource& rng) {
  std::vector<int> tiles(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n * n; ++i) tiles[static_cast<std::size_t>(i)] = i;
  rng.shuffle(tiles);
  if (!is_solvable(n, tiles)) {
    int a = -1;
    int b = -1;
    for (int i = 0; i < n * n && b < 0; ++i) {
      if (tiles[static_cast<std::size_t>(i)] == 0) continue;
      (a < 0 ? a : b) = i;
    }
    std::swap(tiles[static_cast<std::size_t>(a)], tiles[static_cast<std::size_t>(b)]);
  }
  return pack(tiles);
}

State PuzzleDomain::parse_line(int n, const std::string& line) {
  std::istringstream in(line);
  std::vector<int> tiles;
  int v;
  while (in >> v) tiles.push_back(v);
  if (static_cast<int>(tiles.size()) != n * n) {
    throw IoError("expected " + std::to_string(n * n) + " tiles, got " +
                  std::to_string(tiles.size()));
  }
  if (!is_permutation(n, tiles)) {
    throw IoError("tile list is not a permutation");
  }
  if (!is_solvable(n, tiles)) {
    throw IoError("instance is not solvable");
  }
  return pack(tiles);
}

void PuzzleDomain::moves_from(State s, std::vector<Successor>& out) const {
  out.clear();
  const int blank = find_blank(s, cells_);
  const int r = blank / n_;
  const int c = blank % n_;
  // Fixed order: up, left, right, down.
  const int dr[4] = {-1, 0, 0, 1};
  const int dc[4] = {0, -1, 1, 0};
  for (int m = 0; m < 4; ++m) {
    const int nr = r + dr[m];
    const int nc = c + dc[m];
    if (nr < 0 || nr >= n_ || nc < 0 || nc >= n_) continue;
    const int from = nr * n_ + nc;
    const int tile = tile_at(s, from);
    State next = with_tile(s, blank, tile);
    next = with_tile(next, from, 0);
    out.push_back(Successor{next, 1});
  }
}

void PuzzleDomain::successors(State s, std::vector<Successor>& out) const {
  moves_from(s, out);
}

void PuzzleDomain::predecessors(State s, std::vector<Successor>& out) const {
  // Blank moves are self-inverse and unit cost in both directions.
  moves_from(s, out);
}

Cost PuzzleDomain::heuristic(State s, Direction d) const {
  const auto& table = d == Direction::kForward ? to_goal_ : to_start_;
  Cost sum = 0;
  for (int pos = 0; pos < cells_; ++pos) {
    const int tile = tile_at(s, pos);
    if (tile != 0) sum += table[static_cast<std::size_t>(pos)][static_cast<std::size_t>(tile)];
  }
  return sum;
}

Cost PuzzleDomain::heuristic_between(State from, State to) const {
  std::array<int, 16> pos_in_to{};
  for (int pos = 0; pos < cells_; ++pos) {
    pos_in_to[static_cast<std::size_t>(tile_at(to, pos))] = pos;
  }
  Cost sum = 0;
  for (int pos = 0; pos < cells_; ++pos) {
    const int tile = tile_at(from, pos);
    if (tile == 0) continue;
    const int tp = pos_in_to[static_cast<std::size_t>(tile)];
    sum += std::abs(pos / n_ - tp / n_) + std::abs(pos % n_ - tp % n_);
  }
  return sum;
}

std::string PuzzleDomain::format(State s) const {
  std::string out;
  for (int i = 0; i < cells_; ++i) {
    if (i) out += (i % n_ == 0) ? '/' : ' ';
    out += std::to_string(tile_at(s, i));
  }
  return out;
}

}  // namespace bisearch
