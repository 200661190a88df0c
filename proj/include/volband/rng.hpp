#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace volband {

/// Deterministic random stream used throughout the library.
///
/// All draws are derived from the raw 64-bit output of a mt19937_64 engine,
/// so a given seed reproduces the same sequence on every platform and
/// standard library. Distribution transforms are implemented here rather
/// than with std:: distributions, whose sequences are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for chain `stream` under a single master seed.
  /// The stream seed is splitmix64(seed XOR (stream+1)*0x9E3779B97F4A7C15).
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed ^ ((stream + 1) * 0x9E3779B97F4A7C15ULL)));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform draw in the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal draw (Marsaglia polar method; second value discarded).
  double normal() {
    for (;;) {
      const double u = 2.0 * uniform() - 1.0;
      const double v = 2.0 * uniform() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        return u * std::sqrt(-2.0 * std::log(s) / s);
      }
    }
  }

  /// Gamma(shape, 1) draw via the Marsaglia-Tsang rejection sampler,
  /// exact for all shape > 0 (shapes below 1 are boosted by one and
  /// rescaled with a uniform power).
  double gamma(double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
      throw std::invalid_argument("gamma: shape must be positive and finite");
    }
    if (shape < 1.0) {
      const double boosted = gamma(shape + 1.0);
      return boosted * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace volband
