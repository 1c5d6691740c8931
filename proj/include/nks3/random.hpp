#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nks3 {

// Deterministic random stream. mt19937_64 output is fully specified by the
// standard and the gaussian transform is implemented by hand, so a given seed
// produces the same sequence on every platform. Streams are passed explicitly
// and never shared between threads.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // 53-bit uniform in [0, 1).
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Marsaglia polar method.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    for (;;) {
      const double u = 2.0 * uniform01() - 1.0;
      const double v = 2.0 * uniform01() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
      }
    }
  }

  // Independent stream for partitioned work, derived from the seed and index.
  RandomStream derive(std::uint64_t index) const {
    std::uint64_t h = seed_ ^ (0x9e3779b97f4a7c15ULL + index);
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return RandomStream(h);
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nks3
