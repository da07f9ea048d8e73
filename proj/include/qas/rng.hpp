#pragma once

#include <cstdint>

namespace qas {

/// splitmix64; used instead of std::mt19937 so that seeded runs are
/// byte-identical across standard libraries.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  /// uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// uniform nonzero in [-k, k], k >= 1
  std::int64_t nonzero(std::int64_t k) {
    std::int64_t v = range(1, 2 * k);
    return v <= k ? v : k - v;  // 1..k, then -1..-k
  }
};

}  // namespace qas
