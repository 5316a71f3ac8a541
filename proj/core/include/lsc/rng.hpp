#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace lsc {

// splitmix64. The standard <random> engines are portable but the
// distributions are not, and fold assignments, subsamples and synthetic
// corpora must be bit-reproducible across platforms, so we roll our own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n == 0 is a caller bug; returns 0.
  std::size_t below(std::size_t n) {
    if (n == 0) return 0;
    return static_cast<std::size_t>(next_u64() % n);
  }

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Fisher-Yates, deterministic for a given seed.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // n items without replacement, in draw order.
  template <typename T>
  std::vector<T> sample(std::vector<T> pool, std::size_t n) {
    shuffle(pool);
    if (n < pool.size()) pool.resize(n);
    return pool;
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and a tag, so the
// protocol can hand out per-domain / per-fold randomness that does not
// depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

}  // namespace lsc
