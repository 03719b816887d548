#pragma once

#include <cstdint>
#include <random>

namespace bisearch {

// Deterministic random helper. Avoids std distributions so that a given seed
// reproduces the same stream regardless of standard library version.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }

  // Uniform value in [0, n) by rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = rng_();
    while (v >= limit) v = rng_();
    return v % n;
  }

  bool chance_percent(std::uint64_t percent) {
    return below(100) < percent;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bisearch
