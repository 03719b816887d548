#pragma once

#include <optional>
#include <unordered_map>

#include "bisearch/closed_set.hpp"
#include "bisearch/cost.hpp"
#include "bisearch/direction.hpp"
#include "bisearch/error.hpp"
#include "bisearch/frontier.hpp"

namespace bisearch {

// One directional best-first search structure: OPEN (heap plus live map) and
// CLOSED. Heap entries are invalidated lazily; the live open map is exact, so
// |OPEN| and emptiness tests are exact too.
class SearchTree {
 public:
  struct OpenEntry {
    Cost g = 0;
    Cost key = 0;
    State parent = 0;
    bool has_parent = false;
  };

  struct Selected {
    State state;
    Cost g;
    Cost key;
    State parent;
    bool has_parent;
  };

  explicit SearchTree(Direction dir) : dir_(dir) {}

  Direction direction() const { return dir_; }

  // Inserts s into OPEN or improves its g. Returns true when the node was
  // inserted or improved. Discovering a shorter path to a closed node is an
  // invariant violation: engines here assume consistent heuristics and never
  // re-open.
  bool reach(State s, Cost g, Cost key, const State* parent) {
    if (const NodeInfo* done = closed_.find(s)) {
      BISEARCH_CHECK(g >= done->g,
                     "shorter path to a closed node; heuristic is not consistent");
      return false;
    }
    auto it = open_.find(s);
    if (it != open_.end()) {
      if (g >= it->second.g) {
        return false;
      }
      it->second.g = g;
      it->second.key = key;
      it->second.parent = parent ? *parent : 0;
      it->second.has_parent = parent != nullptr;
    } else {
      OpenEntry e;
      e.g = g;
      e.key = key;
      e.parent = parent ? *parent : 0;
      e.has_parent = parent != nullptr;
      open_.emplace(s, e);
    }
    heap_.push(s, g, key);
    if (g > max_stored_g_) max_stored_g_ = g;
    return true;
  }

  // Pops the minimum-key live open node without closing it.
  std::optional<Selected> select_min() {
    skim();
    if (heap_.empty()) return std::nullopt;
    Frontier::Entry e = heap_.pop();
    auto it = open_.find(e.state);
    Selected out{e.state, it->second.g, it->second.key, it->second.parent,
                 it->second.has_parent};
    open_.erase(it);
    return out;
  }

  void close(const Selected& sel) {
    NodeInfo info;
    info.g = sel.g;
    info.parent = sel.parent;
    info.has_parent = sel.has_parent;
    closed_.insert(sel.state, info);
  }

  // Removes a live open node (BS* pruning). Returns true if it was open.
  bool remove_open(State s) {
    return open_.erase(s) > 0;
  }

  // Minimum key over live open nodes, infinity when OPEN is empty.
  Cost min_key() {
    skim();
    return heap_.fmin();
  }

  std::size_t open_size() const { return open_.size(); }
  bool open_empty() const { return open_.empty(); }

  const OpenEntry* open_info(State s) const {
    auto it = open_.find(s);
    return it == open_.end() ? nullptr : &it->second;
  }

  const NodeInfo* closed_info(State s) const { return closed_.find(s); }

  const ClosedSet& closed() const { return closed_; }

  // Best known g for s regardless of open/closed status.
  std::optional<Cost> g_of(State s) const {
    if (const NodeInfo* c = closed_.find(s)) return c->g;
    if (const OpenEntry* o = open_info(s)) return o->g;
    return std::nullopt;
  }

  // Parent chain lookup across open and closed nodes.
  bool parent_of(State s, State& parent_out) const {
    if (const NodeInfo* c = closed_.find(s)) {
      if (!c->has_parent) return false;
      parent_out = c->parent;
      return true;
    }
    if (const OpenEntry* o = open_info(s)) {
      if (!o->has_parent) return false;
      parent_out = o->parent;
      return true;
    }
    throw InvariantViolation("parent_of: state not in tree");
  }

  bool contains(State s) const { return closed_.contains(s) || open_info(s) != nullptr; }

  // Largest g ever stored; every state in the tree has g no larger than this,
  // which is what the reach gate needs.
  Cost max_stored_g() const { return max_stored_g_; }

  std::size_t stored_size() const { return open_.size() + closed_.size(); }

  const std::unordered_map<State, OpenEntry>& open_map() const { return open_; }

 private:
  // Drops heap entries that no longer match a live open node.
  void skim() {
    while (!heap_.empty()) {
      const Frontier::Entry& e = heap_.top();
      auto it = open_.find(e.state);
      if (it != open_.end() && it->second.g == e.g && it->second.key == e.key) {
        return;
      }
      heap_.pop();
    }
  }

  Direction dir_;
  Frontier heap_;
  std::unordered_map<State, OpenEntry> open_;
  ClosedSet closed_;
  Cost max_stored_g_ = 0;
};

}  // namespace bisearch
