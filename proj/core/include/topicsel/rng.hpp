#pragma once

#include <cstdint>

namespace topicsel {

namespace detail {

// splitmix64 finalizer; also used to derive substream keys.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// Deterministic pseudo-random stream (xoshiro256++ seeded via splitmix64).
///
/// Identical seed + identical call sequence gives identical outputs,
/// independent of platform and standard library. Independent substreams
/// for parallel trials are derived from (master seed, stream index) with
/// `substream`, so deleting or reordering other trials never perturbs a
/// given trial's draws.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : state_) {
      x += 0x9e3779b97f4a7c15ull;
      w = detail::mix64(x);
    }
  }

  static RngStream substream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1); rejects exact zero.
  double next_double_open() {
    double u;
    do {
      u = next_double();
    } while (u == 0.0);
    return u;
  }

private:
  std::uint64_t state_[4];
};

/// Seed of the substream for (master seed, stream index); depends on nothing
/// else, so trials can be generated in any order or in parallel.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
  return detail::mix64(master_seed ^ detail::mix64(stream_index));
}

inline RngStream RngStream::substream(std::uint64_t master_seed, std::uint64_t stream_index) {
  return RngStream(derive_seed(master_seed, stream_index));
}

} // namespace topicsel
