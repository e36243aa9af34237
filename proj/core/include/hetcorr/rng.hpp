#pragma once

#include <cstdint>
#include <span>

namespace hetcorr {

/// Deterministic block-structured Gaussian stream. Samples are produced in
/// independent blocks of kBlock values; the RNG for block b of stream s is
/// seeded only by (seed, s, b), so any block can be generated in any order
/// (or concurrently) with bit-identical output.
class GaussianStream {
 public:
  static constexpr std::size_t kBlock = 4096;

  /// Fill out[0..n) with standard normal samples i0..i0+n of stream
  /// (seed, stream_id). i0 may start mid-block.
  static void fill(std::span<double> out, std::uint64_t seed,
                   std::uint64_t stream_id, std::uint64_t i0 = 0);

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);
};

}  // namespace hetcorr
