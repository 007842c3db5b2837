#pragma once

#include <cmath>
#include <cstdint>

namespace sl2lab {

/// SplitMix64. Counter-style seedable generator: cheap to fork, identical
/// streams on every platform, so every stochastic result in the laboratory
/// is reproducible from the recorded seed alone.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound >= 1.
  uint64_t next_below(uint64_t bound) {
    const uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Uniform double in [0,1) with 53 random bits.
  double next_double() { return (double)(next() >> 11) * 0x1.0p-53; }

private:
  uint64_t state_;
};

/// Derives an independent stream seed from (seed, tag, index); used to hand
/// each work unit its own generator so results do not depend on scheduling.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag, uint64_t index = 0) {
  SplitMix64 rng(seed ^ (tag * 0xd1342543de82ef95ull) ^ (index * 0x2545f4914f6cdd1dull));
  rng.next();
  return rng.next();
}

/// Wilson score upper confidence bound for a binomial proportion.
inline double wilson_upper(uint64_t successes, uint64_t trials, double z) {
  if (trials == 0) return 1.0;
  const double n = (double)trials;
  const double phat = (double)successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = phat + z2 / (2.0 * n);
  const double rad = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  const double u = (center + rad) / denom;
  return u > 1.0 ? 1.0 : u;
}

}  // namespace sl2lab
