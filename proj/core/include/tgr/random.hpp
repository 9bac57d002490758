#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace tgr {

/// Integers uniform in [-bound, bound] from std::mt19937_64, drawn by
/// rejection sampling so the stream depends only on the seed.
class IntegerDraw {
 public:
  IntegerDraw(std::uint64_t seed, int bound) : engine_(seed), bound_(bound) {
    if (bound < 0) throw std::invalid_argument("bound must be non-negative");
    range_ = 2 * static_cast<std::uint64_t>(bound) + 1;
    limit_ = std::numeric_limits<std::uint64_t>::max() -
             std::numeric_limits<std::uint64_t>::max() % range_;
  }

  long operator()() {
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit_);
    return static_cast<long>(x % range_) - bound_;
  }

  /// Same distribution with zero excluded; needs bound >= 1.
  long nonzero() {
    if (bound_ == 0) throw std::invalid_argument("nonzero draw needs bound >= 1");
    long v;
    do {
      v = (*this)();
    } while (v == 0);
    return v;
  }

 private:
  std::mt19937_64 engine_;
  long bound_;
  std::uint64_t range_ = 1;
  std::uint64_t limit_ = 0;
};

/// Seed for a second independent stream attached to the same draw index.
inline std::uint64_t derived_seed(std::uint64_t seed) { return seed ^ 0x9E3779B97F4A7C15ULL; }

}  // namespace tgr
