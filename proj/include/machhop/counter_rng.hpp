#pragma once

// Counter-based deterministic randomness: the value drawn for slot t depends
// only on (seed, stream, t), so a sequence can be regenerated slot by slot
// without carrying generator state.

#include <cstdint>

namespace machhop {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t counter) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

/// Uniform integer in [0, n) via 128-bit multiply-high; n >= 1.
constexpr std::uint64_t counter_uniform(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t counter, std::uint64_t n) noexcept {
  const auto h = counter_hash(seed, stream, counter);
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * n) >> 64);
}

namespace rng_stream {
inline constexpr std::uint64_t id_channel = 0x1d;
inline constexpr std::uint64_t replacement = 0x2e;
inline constexpr std::uint64_t user_seed = 0x3f;
}  // namespace rng_stream

}  // namespace machhop
