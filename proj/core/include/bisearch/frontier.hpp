#pragma once

#include <cstdint>
#include <vector>

#include "bisearch/cost.hpp"
#include "bisearch/domain.hpp"
#include "bisearch/error.hpp"

namespace bisearch {

// Priority queue over open nodes keyed by the evaluation value. Ties are
// broken toward larger g (deeper nodes), remaining ties by insertion order,
// so replays are deterministic.
class Frontier {
 public:
  struct Entry {
    Cost key;
    Cost g;
    std::uint64_t seq;
    State state;
  };

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  void push(State state, Cost g, Cost key) {
    heap_.push_back(Entry{key, g, next_seq_++, state});
    sift_up(heap_.size() - 1);
  }

  const Entry& top() const {
    BISEARCH_CHECK(!heap_.empty(), "Frontier::top on empty frontier");
    return heap_.front();
  }

  Cost fmin() const { return heap_.empty() ? kInfiniteCost : heap_.front().key; }

  Entry pop() {
    BISEARCH_CHECK(!heap_.empty(), "Frontier::pop on empty frontier");
    Entry out = heap_.front();
    heap_.front() = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      sift_down(0);
    }
    return out;
  }

  void clear() {
    heap_.clear();
    next_seq_ = 0;
  }

 private:
  static bool before(const Entry& a, const Entry& b) {
    if (a.key != b.key) return a.key < b.key;
    if (a.g != b.g) return a.g > b.g;
    return a.seq < b.seq;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!before(heap_[i], heap_[parent])) break;
      std::swap(heap_[i], heap_[parent]);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t best = i;
      std::size_t l = 2 * i + 1;
      std::size_t r = 2 * i + 2;
      if (l < n && before(heap_[l], heap_[best])) best = l;
      if (r < n && before(heap_[r], heap_[best])) best = r;
      if (best == i) break;
      std::swap(heap_[i], heap_[best]);
      i = best;
    }
  }

  std::vector<Entry> heap_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace bisearch
