#pragma once

#include <cstdint>
#include <random>

namespace heavytail {

// Seeded random stream. Identical (seed, stream) reproduce the identical
// variate sequence on any conforming platform: mt19937_64 output is fully
// specified by the standard and all variates below are derived from raw
// 64-bit words, never from std::*_distribution (whose algorithms are
// implementation-defined). Distinct stream ids are decorrelated through
// seed_seq mixing; parallel Monte Carlo should give each shard its own
// stream id, which makes results independent of the shard count given the
// (seed, stream partition).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on (0, 1]: ((x >> 11) + 1) * 2^-53. Zero is excluded so inverse
  // transforms never divide by zero or take log(0).
  double uniform01();

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal();

  // Fair coin in {0, 1}; consumes one uniform.
  int bernoulli();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace heavytail
