#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace seriate {

// All randomness in the library flows through this header so that results are
// reproducible bit-for-bit from a single 64-bit seed, independent of platform
// and of how work is scheduled across threads.

// splitmix64 finalizer; good avalanche, used for seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stable mix of several 64-bit values into one seed. Parallel work items
// (sweep cells, trials, k-means restarts, generator rows) each derive their
// own stream via mix_seed({master, item indices...}), so the schedule cannot
// influence any draw.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x8f14e45fceea167aULL;
  for (std::uint64_t p : parts) h = mix64(h ^ p);
  return h;
}

// Salts used to split one per-trial seed into independent purposes.
inline constexpr std::uint64_t kSaltGenerate = 0x67452301efcdab89ULL;
inline constexpr std::uint64_t kSaltShuffle = 0x10325476c3d2e1f0ULL;
inline constexpr std::uint64_t kSaltKmeans = 0x5be0cd190e527fadULL;

// Deterministic engine wrapper. std::mt19937_64 output is pinned by the
// standard; the conversions below are written out so no library-dependent
// distribution code is involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, bound), unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Random permutation perm[old] = new, uniform over all n! permutations.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    shuffle(p);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace seriate
