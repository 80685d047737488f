#pragma once

#include <cmath>
#include <cstdint>

namespace schatten {

inline constexpr double kPi = 3.14159265358979323846;

// Counter-based splitmix64 stream. Instances are cheap value types; a
// (seed, stream) pair always yields the same sequence, independent of any
// other stream, which is what makes chunked parallel sampling reproducible.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) noexcept {
    state_ = mix(seed + 0x9E3779B97F4A7C15ull);
    state_ ^= mix(stream + 0xBF58476D1CE4E5B9ull);
    state_ = mix(state_);
  }

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // [0, 1), 53-bit resolution.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1); safe as a log argument.
  double uniform_open() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Box-Muller without caching the second variate: every call consumes
  // exactly two uniforms, so consumption is position-independent.
  double normal() noexcept {
    const double u = uniform_open();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace schatten
