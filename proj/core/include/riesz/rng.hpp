#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Core>

namespace riesz {

/// splitmix64 finalizer; used to spread user seeds and derive per-task streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds extra stream identifiers into a base seed (order-sensitive).
constexpr std::uint64_t derive_seed(std::uint64_t base) { return splitmix64(base); }

template <typename... Rest>
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t next, Rest... rest) {
  return derive_seed(splitmix64(base ^ (next + 0x9e3779b97f4a7c15ULL)), rest...);
}

/// Seeded random source. All library randomness flows through instances of
/// this class so that runs are reproducible bit-for-bit. The uniform and
/// gaussian mappings are implemented here (not via std distributions, whose
/// output is implementation-defined) to keep streams portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; caches the paired deviate.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  Eigen::VectorXd gaussian_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index k = 0; k < n; ++k) v[k] = gaussian();
    return v;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace riesz
