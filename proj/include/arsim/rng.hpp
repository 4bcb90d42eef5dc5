#pragma once

#include <cstdint>

namespace arsim {

/**
 * SplitMix64 generator. Self-contained so that (scenario, seed) produces the
 * same trace on every platform and standard library.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n). n must be positive; modulo bias is irrelevant
  // at the tiny ranges used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace arsim
