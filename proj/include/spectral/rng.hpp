#pragma once

#include <array>
#include <cstdint>

namespace spectral {

/// Splittable pseudo-random stream.  (seed, stream_id) fully determines the
/// sequence: the state is xoshiro256++ initialized by SplitMix64 over both
/// words, so distinct stream ids give statistically independent substreams
/// and replays are bit-identical.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  /// Standard normal via the Marsaglia polar method (second variate cached).
  double next_normal();

  /// Gamma(shape, scale=1) variate, Marsaglia-Tsang squeeze; shapes below 1
  /// are boosted through Gamma(shape+1) * U^(1/shape).
  double next_gamma(double shape);

  /// Chi variate with r degrees of freedom (r > 0, not necessarily integer):
  /// sqrt of Gamma(r/2, scale=2).
  double next_chi(double r);

 private:
  std::array<std::uint64_t, 4> state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace spectral
