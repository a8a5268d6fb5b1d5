#pragma once

// Deterministic splittable counter-based generator (SplitMix64 core) so
// certificates are reproducible across platforms from a single seed.

#include <cstdint>

namespace sph {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  int uniform(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) { return lo + uniform(hi - lo + 1); }

  bool coin() { return (next_u64() & 1) != 0; }

  // Independent child stream; advancing the child never affects the parent.
  Rng split() { return Rng(next_u64() ^ 0x5851f42d4c957f2dULL); }

 private:
  std::uint64_t state_;
};

}  // namespace sph
