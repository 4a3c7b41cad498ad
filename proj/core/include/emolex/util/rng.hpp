#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace emolex {

/// FNV-1a; stable across platforms so per-entity seeds are reproducible.
constexpr std::uint64_t stable_hash(std::string_view text) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::string_view salt = {}) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stable_hash(salt)),
                    static_cast<std::uint32_t>(stable_hash(salt) >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform integer in [0, bound) without relying on the implementation-defined
/// std::uniform_int_distribution, so sampled outputs match across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw = 0;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

template <typename It>
void stable_shuffle(It first, It last, std::mt19937_64& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const auto j = uniform_below(rng, i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace emolex
