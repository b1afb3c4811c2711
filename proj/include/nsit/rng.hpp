#pragma once

#include <cstdint>
#include <cmath>

#include <Eigen/Dense>

namespace nsit {

// One splitmix64 mixing round.  Used as the seed-expansion function and as
// the core of Rng below, so every random draw in the project is pinned to a
// fixed, platform-independent bit stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seed-splitting rule: the sub-seed for (seed, stream, index) is
//   splitmix64(splitmix64(seed ^ golden * (stream + 1)) + index).
// Consumers that draw per-item randomness (dataset examples, ensemble
// samples) derive their seeds this way, which makes results independent of
// batching and execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ 0x9e3779b97f4a7c15ull * (stream + 1)) + index);
}

// Deterministic double-precision generator on a splitmix64 stream.  The
// uint64 -> double mapping takes the top 53 bits, so the produced sequence
// is fully specified by the seed (std::generate_canonical and the std
// distributions are implementation-defined and deliberately avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the Marsaglia polar method; the spare deviate from
  // each accepted pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0, v = 0, s = 0;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  // Uniform direction on the unit sphere (Marsaglia rejection).
  Eigen::Vector3d unit_sphere() {
    double x1 = 0, x2 = 0, s = 0;
    do {
      x1 = 2.0 * uniform() - 1.0;
      x2 = 2.0 * uniform() - 1.0;
      s = x1 * x1 + x2 * x2;
    } while (s >= 1.0);
    const double r = std::sqrt(1.0 - s);
    return {2.0 * x1 * r, 2.0 * x2 * r, 1.0 - 2.0 * s};
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace nsit
