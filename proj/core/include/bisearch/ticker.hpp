#pragma once

#include <chrono>
#include <cstdint>

#include "bisearch/error.hpp"

namespace bisearch {

// Cooperative per-thread deadline. Engines poll it every few thousand
// expansions; the benchmark runner installs it around each instance. Search
// results of runs that do not time out are unaffected.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::duration budget) {
    previous_ = deadline_;
    deadline_ = std::chrono::steady_clock::now() + budget;
    active_ = true;
  }
  ~ScopedDeadline() {
    deadline_ = previous_;
    active_ = previous_ != std::chrono::steady_clock::time_point{};
  }

  static void poll() {
    thread_local std::uint32_t countdown = 0;
    if (++countdown < 4096) return;
    countdown = 0;
    if (active_ && std::chrono::steady_clock::now() > deadline_) {
      throw Timeout();
    }
  }

 private:
  static thread_local std::chrono::steady_clock::time_point deadline_;
  static thread_local std::chrono::steady_clock::time_point previous_;
  static thread_local bool active_;
};

}  // namespace bisearch
