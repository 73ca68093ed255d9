#pragma once

// Small, fully specified generators so that seeded runs are bit-identical
// across platforms and standard library versions.

#include <cstdint>

namespace eisen {

/// SplitMix64 (Steele, Lea, Flood). Used directly for factoring and
/// root-splitting randomness, and to seed Xoshiro256.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna).
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& s : s_) s = sm.next();
  }

  /// Generator for substream `stream` of `seed`; distinct streams are
  /// seeded from distinct SplitMix64 outputs.
  static Xoshiro256 substream(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mix(seed ^ (stream * 0xD1B54A32D192ED03ULL));
    mix.next();
    return Xoshiro256(mix.next() ^ stream);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on [0, bound) by Lemire's multiply-and-reject method.
  std::uint64_t below(std::uint64_t bound) {
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<u128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform on [-h, h].
  std::int64_t symmetric(std::int64_t h) {
    return static_cast<std::int64_t>(below(2 * static_cast<std::uint64_t>(h) + 1)) - h;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
};

}  // namespace eisen
