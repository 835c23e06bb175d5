#pragma once

#include <cstdint>

namespace crslab {

// splitmix64: state advances by a fixed odd constant, output is a bijective
// mix of the state. Used instead of <random> engines+distributions because
// std distributions are implementation-defined and replay must be
// byte-identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Independent stream: seed XOR mix(stream_id). Streams derived from the
  // same seed with distinct ids may be consumed in parallel and merged.
  static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t stream_id) {
    return SplitMix64(seed ^ mix(stream_id));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform on [0, bound), bound >= 1, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t v = next();
      if (v >= threshold) return v % bound;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace crslab
