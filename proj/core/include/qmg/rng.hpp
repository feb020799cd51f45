#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qmg {

// Seeded random stream. All randomized routines take one of these explicitly
// so that a given seed reproduces the exact same sequence of draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_mix_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53 bits of entropy. Avoids the
  // implementation-defined behaviour of std::uniform_real_distribution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., n-1} by rejection sampling.
  int uniform_int(int n) {
    const std::uint64_t limit =
        UINT64_MAX - UINT64_MAX % static_cast<std::uint64_t>(n);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return static_cast<int>(v % static_cast<std::uint64_t>(n));
  }

  // Standard normal via Box-Muller (for Haar sampling in tests/tools).
  double gaussian() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  // Deterministic substream derivation: a worker rng whose seed depends
  // only on the master seed and the stream index.
  Rng substream(std::uint64_t index) const {
    std::uint64_t x = seed_mix_ + 0x9e3779b97f4a7c15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return Rng(x ^ (x >> 31));
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_mix_ = 0;
};

}  // namespace qmg
