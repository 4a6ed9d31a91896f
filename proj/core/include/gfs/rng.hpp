#pragma once

#include <array>
#include <cstdint>

namespace gfs {

/// Deterministic PRNG: xoshiro256++ seeded through SplitMix64.
///
/// The algorithm is frozen so that a given seed yields the same stream on
/// every platform and in every build. Substreams come from `split`, which
/// derives a child seed by mixing the parent seed with the stream id; the
/// derivation is part of the frozen contract.
///
/// Gaussians use the Marsaglia polar method (sqrt/log only, one cached
/// spare), so the normal stream is as reproducible as the uniform one.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent substream for `stream`; pure function of (seed, stream).
  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53 random bits.
  double next_double();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal deviate.
  double next_gaussian();

  /// Uniform integer in [0, bound), bound >= 1, rejection-sampled.
  std::uint64_t next_below(std::uint64_t bound);

  std::uint64_t seed() const { return seed_; }

 private:
  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gfs
