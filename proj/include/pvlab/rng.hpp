#pragma once

// Deterministic randomness. mt19937_64's bit stream is specified by the
// standard; std::uniform_int_distribution is not, so sampling is done by
// explicit rejection to keep reports byte-identical across toolchains.

#include <cstdint>
#include <random>

#include "pvlab/rational.hpp"

namespace pvlab {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [lo, hi], inclusive.
  long uniform_int(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next_u64());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  long nonzero_int(long bound) {
    long v;
    do {
      v = uniform_int(-bound, bound);
    } while (v == 0);
    return v;
  }

  // Random rational with numerator in [-num_bound, num_bound] and denominator
  // in [1, den_bound]; canonicalized.
  Rat uniform_rat(long num_bound, long den_bound) {
    return rat(uniform_int(-num_bound, num_bound), uniform_int(1, den_bound));
  }

  // Uniform in [0,1) with 53 random mantissa bits.
  double uniform_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform_double(double lo, double hi) { return lo + (hi - lo) * uniform_unit(); }

  // Deterministic sub-stream for task #index (shard and trial seeding).
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pvlab
