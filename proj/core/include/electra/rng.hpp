#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace electra {

/// Seeded generator with portable bounded draws.
///
/// std::uniform_int_distribution is implementation-defined, so bounded draws
/// are done here by rejection on top of std::mt19937_64 (whose output sequence
/// is fixed by the standard). Outputs are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Fair coin.
  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Seed for the task-th independent job derived from a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) { return seed ^ task; }

}  // namespace electra
