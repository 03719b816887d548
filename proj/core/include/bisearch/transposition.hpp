#pragma once

#include <cstdint>
#include <vector>

#include "bisearch/cost.hpp"
#include "bisearch/domain.hpp"

namespace bisearch {

// Fixed-capacity bucketed hash table caching dynamically backed-up heuristic
// values per state. Only improvements over the static value are worth
// keeping, so replacement prefers the entry with the larger improvement
// (cached - static), breaking ties toward the deeper g.
class TranspositionTable {
 public:
  struct Entry {
    State key = 0;
    Cost cached_h = 0;
    Cost improvement = 0;  // cached_h - static h at store time
    Cost depth_g = 0;
    std::uint32_t stamp = 0;
    bool used = false;
  };

  static constexpr std::size_t kBucketSlots = 4;

  explicit TranspositionTable(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ > 0) {
      bucket_count_ = (capacity_ + kBucketSlots - 1) / kBucketSlots;
      slots_.assign(bucket_count_ * kBucketSlots, Entry{});
    }
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t entry_count() const { return entries_; }
  bool enabled() const { return capacity_ > 0; }

  const Entry* find(State s) const {
    if (!enabled()) return nullptr;
    const Entry* base = &slots_[bucket_of(s) * kBucketSlots];
    for (std::size_t i = 0; i < kBucketSlots; ++i) {
      if (base[i].used && base[i].key == s) return &base[i];
    }
    return nullptr;
  }

  void store(State s, Cost cached_h, Cost static_h, Cost depth_g, std::uint32_t stamp) {
    if (!enabled()) return;
    Entry* base = &slots_[bucket_of(s) * kBucketSlots];
    Entry* victim = nullptr;
    for (std::size_t i = 0; i < kBucketSlots; ++i) {
      Entry& e = base[i];
      if (e.used && e.key == s) {
        // Same state: keep the stronger bound, refresh position data.
        if (cached_h > e.cached_h) {
          e.cached_h = cached_h;
          e.improvement = cached_h - static_h;
        }
        e.depth_g = depth_g;
        e.stamp = stamp;
        return;
      }
      if (!e.used) {
        if (!victim || victim->used) victim = &e;
      }
    }
    if (victim == nullptr) {
      victim = base;
      for (std::size_t i = 1; i < kBucketSlots; ++i) {
        Entry& e = base[i];
        if (e.improvement < victim->improvement ||
            (e.improvement == victim->improvement && e.depth_g < victim->depth_g)) {
          victim = &e;
        }
      }
      const Cost new_improvement = cached_h - static_h;
      if (victim->improvement > new_improvement ||
          (victim->improvement == new_improvement && victim->depth_g >= depth_g)) {
        return;  // incumbent wins
      }
    } else {
      ++entries_;
    }
    victim->key = s;
    victim->cached_h = cached_h;
    victim->improvement = cached_h - static_h;
    victim->depth_g = depth_g;
    victim->stamp = stamp;
    victim->used = true;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const Entry& e : slots_) {
      if (e.used) fn(e);
    }
  }

 private:
  std::size_t bucket_of(State s) const {
    // Fibonacci scrambling; states are packed bit fields, not random.
    const std::uint64_t h = s * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(h % bucket_count_);
  }

  std::size_t capacity_ = 0;
  std::size_t bucket_count_ = 0;
  std::size_t entries_ = 0;
  std::vector<Entry> slots_;
};

}  // namespace bisearch
