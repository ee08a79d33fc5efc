#pragma once

#include <cstdint>

namespace superexp {

// SplitMix64. The state advances by the golden-ratio increment and the output
// is two xor-shift-multiply rounds of the advanced state. All randomized
// pieces of the project (generators, fuzzing, greedy hash search) draw from
// this one recurrence so runs are reproducible from a single 64-bit seed.
// Test vectors live in docs/formats.md and tests/test_harness.cpp.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform over {0,...,n-1} by modulo. The bias is below 2^-57 for every n
  // used here; taking the remainder keeps the stream identical across
  // platforms and language ports.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform over {lo,...,hi}, inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // 53-bit uniform in [0,1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::uint64_t state_;
};

// The SplitMix64 output function applied to x once.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-trial sub-seed derivation: serial and parallel fuzz runs that share
// (seed, trial_index) draw identical streams.
inline std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index));
}

}  // namespace superexp
