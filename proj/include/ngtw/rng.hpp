#pragma once

#include <cstdint>
#include <random>

namespace ngtw {

// All pseudo-randomness flows through this wrapper: raw mt19937_64 draws
// plus rejection sampling, so results are identical across platforms and
// standard libraries (std distributions are not portable).
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, m); m > 0.
  uint64_t below(uint64_t m) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % m;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 gen_;
};

// Stable per-item seed derivation (splitmix64 over base ^ index), so work
// items can be generated independently and in any order.
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
  uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ngtw
