#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "bisearch/domain.hpp"
#include "bisearch/search_tree.hpp"
#include "bisearch/solution.hpp"
#include "bisearch/stats.hpp"
#include "bisearch/transposition.hpp"

namespace bisearch {

inline constexpr std::uint64_t kUnlimited = 0;

struct AStarOptions {
  std::uint64_t node_limit = kUnlimited;  // generated-node budget
  bool record_expansion_sequence = false;
};

// Either a solution, an exhausted space, or a memory-limit snapshot with the
// intact OPEN/CLOSED structures for a second search phase to build on.
struct AStarResult {
  std::optional<Solution> solution;
  bool no_solution = false;
  bool out_of_memory = false;
  SearchTree tree;
  Cost fmin = kInfiniteCost;       // min f over OPEN at exit
  Cost max_stored_g = 0;           // upper bound on g of any stored node
  SearchStats stats;
  std::vector<State> expansion_sequence;  // filled on request
};

AStarResult astar(const Domain& domain, Direction dir,
                  const AStarOptions& options = {});

struct IdaResult {
  std::optional<Solution> solution;
  bool no_solution = false;
  bool capped = false;  // generation cap hit before finishing
  SearchStats stats;
};

inline constexpr Cost kDefaultThreshold = -1;

// Iterative deepening; the optional initial threshold must be admissible and
// is ignored when below f(root). node_cap (generations) supports bounded
// comparison runs; 0 means unlimited.
IdaResult idastar(const Domain& domain, Direction dir,
                  Cost initial_threshold = kDefaultThreshold,
                  std::uint64_t node_cap = kUnlimited);

struct TransResult {
  IdaResult result;
  std::unique_ptr<TranspositionTable> table;  // final table contents
};

// IDA* with a transposition table of the given capacity. Capacity 0 runs the
// identical search as idastar.
TransResult trans(const Domain& domain, Direction dir, std::size_t tt_capacity,
                  std::uint64_t node_cap = kUnlimited);

}  // namespace bisearch
