#pragma once

#include <cstdint>

namespace graphprof {

// SplitMix64 finalizer. All randomness in this library is counter-based:
// every random decision is a pure function of (seed, counter or key), so
// generated objects are identical for a given seed no matter how the work
// is partitioned across threads.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 64-bit key for the unordered pair {u,v} under `seed`. Symmetric in u,v.
inline std::uint64_t pair_key(std::uint64_t seed, std::uint32_t u, std::uint32_t v) {
  std::uint32_t lo = u < v ? u : v;
  std::uint32_t hi = u < v ? v : u;
  std::uint64_t k = (std::uint64_t{hi} << 32) | lo;
  return splitmix64(splitmix64(seed) ^ k);
}

// Sequential stream seeded from an arbitrary 64-bit key. Used where a
// short sequence of draws is needed (subset sampling); distinct keys give
// independent streams.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(splitmix64(key ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform integer in [0, bound). Rejection-free modulo bias is negligible
  // for bound << 2^64 but we reject anyway to keep draws exactly uniform.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace graphprof
