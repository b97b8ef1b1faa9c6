#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace tsforest {

/// Deterministic, splittable random-number stream.
///
/// A stream is identified by a (seed, stream_id) pair: equal pairs produce
/// bitwise-identical draw sequences on every run and under any thread
/// schedule, distinct pairs produce statistically independent streams.
/// Child streams derived with substream() inherit the same guarantee, which
/// is what makes per-tree and per-iteration parallelism reproducible.
///
/// Backed by xoshiro256++ seeded through a splitmix64 key expansion.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Independent child stream; deterministic function of (parent, child_id).
  [[nodiscard]] RngStream substream(std::uint64_t child_id) const;

  std::uint64_t next_u64();

  /// Uniform draw in [0, 1) with 53 random bits.
  double uniform01();

  /// Unbiased uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard normal deviate (Marsaglia polar, one spare cached).
  double normal();

  /// Geometric draw on {1, 2, ...} with success probability p in (0, 1].
  /// Mean 1/p. p >= 1 collapses to the constant 1.
  std::uint64_t geometric(double p);

  /// Identity string recorded in benchmark metadata.
  static constexpr std::string_view generator_id() noexcept {
    return "xoshiro256++/splitmix64";
  }

 private:
  explicit RngStream(std::uint64_t derived_key);

  std::array<std::uint64_t, 4> state_{};
  std::uint64_t key_ = 0;  // derivation key, consumed by substream()
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace tsforest
