#pragma once

#include <cstdint>

#include "exform/rational.hpp"

namespace exform {

/// Counter-based generator: the n-th draw is a pure function of (seed, stream, n),
/// so independent trials can be generated in any order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// Random rational num/den with |num| <= max_num and 1 <= den <= max_den.
  Rational rational(int max_num, int max_den) {
    Rational r(static_cast<long>(uniform(-max_num, max_num)), static_cast<unsigned long>(uniform(1, max_den)));
    r.canonicalize();
    return r;
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace exform
