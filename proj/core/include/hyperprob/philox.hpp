#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., Random123).
//
// Stream layout used by the simulator, for a 64-bit seed s:
//   key     = (low32(s), high32(s))
//   counter = (low32(i), high32(i), stream, 0)
// where i is the index of the draw inside the stream. Stream 0 drives atom
// draws (one block per draw), stream 1 drives bootstrap resampling. Because
// every draw is addressed by its global index, any partition of the index
// range into shards reproduces the same sequence.

#include <array>
#include <cstdint>
#include <limits>

namespace hyperprob {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

PhiloxKey philox_key(std::uint64_t seed);

enum class PhiloxStream : std::uint32_t { draws = 0, bootstrap = 1 };

/// 64-bit output of block i of a stream (words 0 and 1).
std::uint64_t philox_u64(std::uint64_t seed, PhiloxStream stream,
                         std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
inline double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// UniformRandomBitGenerator walking one stream sequentially, starting at a
/// given block index. Yields 64-bit words.
class PhiloxEngine {
 public:
  using result_type = std::uint64_t;

  PhiloxEngine(std::uint64_t seed, PhiloxStream stream,
               std::uint64_t first_block = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

 private:
  PhiloxKey key_;
  std::uint32_t stream_;
  std::uint64_t block_;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

}  // namespace hyperprob
