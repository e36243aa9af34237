#include "hetcorr/rng.hpp"

#include <cmath>
#include <numbers>

namespace hetcorr {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// xoshiro-free minimal generator: splitmix64 counter stream. Fully
/// specified, so trajectories are reproducible across platforms.
struct Counter64 {
  std::uint64_t state;
  std::uint64_t next() { return splitmix64(state); }
  /// uniform in (0, 1]
  double next_open_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }
  /// uniform in [0, 1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

void fill_block(double* out, std::uint64_t block_seed) {
  Counter64 rng{block_seed};
  for (std::size_t i = 0; i < GaussianStream::kBlock; i += 2) {
    // Box-Muller; u1 in (0,1] keeps the log finite.
    const double u1 = rng.next_open_unit();
    const double u2 = rng.next_unit();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    out[i] = rad * std::cos(ang);
    out[i + 1] = rad * std::sin(ang);
  }
}

}  // namespace

std::uint64_t GaussianStream::mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ (b * 0xD6E8FEB86659FD93ull);
  return splitmix64(x);
}

void GaussianStream::fill(std::span<double> out, std::uint64_t seed,
                          std::uint64_t stream_id, std::uint64_t i0) {
  double block[kBlock];
  std::size_t written = 0;
  while (written < out.size()) {
    const std::uint64_t b = (i0 + written) / kBlock;
    const std::size_t off = static_cast<std::size_t>((i0 + written) % kBlock);
    fill_block(block, mix(mix(seed, stream_id), b));
    std::size_t take = kBlock - off;
    if (take > out.size() - written) take = out.size() - written;
    for (std::size_t j = 0; j < take; ++j) out[written + j] = block[off + j];
    written += take;
  }
}

}  // namespace hetcorr
