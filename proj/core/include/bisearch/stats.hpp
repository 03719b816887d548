#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bisearch/cost.hpp"
#include "bisearch/direction.hpp"
#include "bisearch/domain.hpp"

namespace bisearch {

// Counter conventions, shared by every engine in this repository:
//  - a node is "generated" whenever a successor record is constructed,
//    including records later screened, trimmed, pruned or probe-only;
//  - a node is "expanded" when its successors are generated by a main search
//    phase (probing work is tracked separately in probe_generated/expanded);
//  - best-first searches that select their own terminal stop without
//    expanding it.
struct SearchStats {
  std::uint64_t nodes_generated = 0;
  std::uint64_t nodes_expanded = 0;

  // Expansion counts per f value, per direction (best-first engines only).
  std::map<Cost, std::uint64_t> f_histogram[2];

  struct FirstSolution {
    std::uint64_t nodes_generated_at = 0;
    Cost cost = 0;
  };
  std::optional<FirstSolution> first_solution;
  std::uint64_t optimal_found_at = 0;

  std::chrono::duration<double> wall_time{0};

  std::optional<Direction> direction_assignment;
  std::vector<Cost> threshold_sequence;
  std::vector<std::uint64_t> iteration_generated;

  // Peak count of simultaneously stored nodes (open + closed + tables +
  // perimeter, whatever the engine keeps).
  std::uint64_t memory_peak = 0;

  // Direction-probing overhead (included in nodes_generated).
  std::uint64_t probe_generated = 0;
  std::uint64_t probe_expanded = 0;
  // Perimeter / first-phase construction work (included in nodes_generated).
  std::uint64_t setup_generated = 0;

  std::uint64_t nipped = 0;
  std::vector<State> nipped_states;
  std::vector<State> pruned_states;

  // Every complete-path candidate cost observed (meetings, terminal hits).
  std::vector<Cost> candidate_costs;

  void note_expansion(Direction d, Cost f) {
    ++nodes_expanded;
    ++f_histogram[dir_index(d)][f];
  }

  void track_memory(std::uint64_t stored_now) {
    if (stored_now > memory_peak) memory_peak = stored_now;
  }
};

}  // namespace bisearch
