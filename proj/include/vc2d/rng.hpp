#pragma once

#include <cstdint>

#include "vc2d/point.hpp"

namespace vc2d {

// splitmix64: tiny seeded generator whose output is identical on every
// platform, so seeded random-point suites reproduce bit for bit
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
  }

  Point2 point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::uint64_t state_;
};

}  // namespace vc2d
