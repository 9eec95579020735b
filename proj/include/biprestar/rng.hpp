#pragma once

#include <cstdint>

namespace biprestar {

// Counter-based generator: the value of draw k on stream s is a pure
// function of (seed, s, k), so any partition of streams across workers
// reproduces the same numbers.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ULL))) {}

  std::uint64_t next() noexcept {
    return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform in [0, 1).
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace biprestar
