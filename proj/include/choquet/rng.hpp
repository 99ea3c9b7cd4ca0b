#pragma once

#include <cstdint>

namespace choquet {

/// SplitMix64. Small, portable and bit-reproducible across standard
/// libraries, unlike the std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

/// Independent stream for the k-th trial of an experiment seeded by `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  Rng r(seed ^ (0xd1b54a32d192ed03ULL * (k + 1)));
  return r.next();
}

}  // namespace choquet
