// Seedable 64-bit generator (splitmix64); identical seeds reproduce streams
// bit-exactly on every platform.
#pragma once

#include <cstdint>

#include "cover3/rational.hpp"

namespace cover3 {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Rational rational(long long lo, long long hi, long long den) {
    return Rational(BigInt(range(lo * den, hi * den)), BigInt(den));
  }

 private:
  std::uint64_t state_;
};

}  // namespace cover3
