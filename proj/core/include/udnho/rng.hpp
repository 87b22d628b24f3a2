#pragma once

#include <cmath>
#include <cstdint>

// Self-contained, portable RNG: xoshiro256++ seeded through splitmix64.
// Per-realization streams are derived by hashing (master_seed,
// realization_index), so results do not depend on execution order and the
// same seed reproduces bit-identical output on any platform.

namespace udnho {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Order-insensitive only in the sense that each (seed, words...) tuple maps
// to one stream; use distinct word sequences for distinct purposes.
inline std::uint64_t hash_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                               std::uint64_t c = 0) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  s ^= a + 0x9E3779B97F4A7C15ULL;
  h ^= splitmix64(s);
  s ^= b + 0xC2B2AE3D27D4EB4FULL;
  h ^= splitmix64(s);
  s ^= c + 0x165667B19E3779F9ULL;
  h ^= splitmix64(s);
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Exact Poisson sample. Splits large means into independent chunks
  // (Poisson(a+b) = Poisson(a) + Poisson(b)) so the product method never
  // underflows.
  std::uint64_t poisson(double mean) {
    std::uint64_t n = 0;
    while (mean > 30.0) {
      n += poisson_small(30.0);
      mean -= 30.0;
    }
    return n + poisson_small(mean);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t poisson_small(double mean);

  std::uint64_t s_[4];
};

inline std::uint64_t Rng::poisson_small(double mean) {
  if (mean <= 0.0) return 0;
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= uniform();
  } while (p > limit);
  return k - 1;
}

}  // namespace udnho
