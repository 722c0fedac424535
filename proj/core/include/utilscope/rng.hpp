#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace utilscope {

// splitmix64 step; also used as a mixing function for derived seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic generator with a fixed cross-platform output sequence.
// Standard-library distributions are implementation defined, so uniform
// and normal draws are produced here directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n > 0. Rejection-free 128-bit scaling.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Standard normal via Box-Muller; consumes two draws per call.
  double normal() {
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

// Derives a stream key from a seed and a sequence of values, independent
// of any shared generator state.
inline std::uint64_t derive_seed(std::uint64_t seed, std::span<const std::int64_t> values) {
  std::uint64_t state = seed ^ 0xD1B54A32D192ED03ULL;
  splitmix64(state);
  for (std::int64_t v : values) {
    state ^= static_cast<std::uint64_t>(v);
    splitmix64(state);
  }
  return state;
}

}  // namespace utilscope
