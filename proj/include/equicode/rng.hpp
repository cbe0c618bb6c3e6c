#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace equicode {

/// Seedable stream over std::mt19937_64, whose output sequence is fixed by the
/// C++ standard. Uniforms take the top 53 bits of each draw; Gaussians use the
/// Marsaglia polar transform on those uniforms.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian();

  /// Index uniform on [0, bound) by rejection, free of modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Seed for an independent sub-stream (splitmix64 finalizer of seed and stream index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  std::optional<double> spare_;
};

}  // namespace equicode
