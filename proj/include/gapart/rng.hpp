#pragma once

#include <cstdint>

#include "gapart/bigint.hpp"
#include "gapart/errors.hpp"

namespace gapart {

/// SplitMix64 (Steele, Lea, Flood 2014). Fully specified by its 64-bit
/// arithmetic, so a seed produces the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed for a labelled job (e.g. one (k, n) pair
/// of a sampling sweep) by pushing the labels through the SplitMix64 mixer.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  SplitMix64 mix(seed ^ (a * 0xD1B54A32D192ED03ULL));
  mix.next();
  SplitMix64 second(mix.next() ^ (b * 0x8CB92BA72F3D8DD7ULL));
  return second.next();
}

/// Uniform integer in [0, bound) by rejection.
///
/// With b = bit_length(bound - 1), draws ceil(b/64) words, concatenates them
/// most-significant first, keeps the top b bits and retries while the result
/// is >= bound. bound == 1 returns 0 without consuming the stream.
inline BigInt uniform_below(const BigInt& bound, SplitMix64& rng) {
  if (sgn(bound) <= 0) throw PreconditionError("uniform_below requires bound >= 1");
  const BigInt top = bound - 1;
  const std::size_t bits = bit_length(top);
  if (bits == 0) return BigInt(0);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t drop = words * 64 - bits;
  BigInt word;
  for (;;) {
    BigInt value = 0;
    for (std::size_t i = 0; i < words; ++i) {
      const std::uint64_t w = rng.next();
      // mpz_class has no portable uint64 constructor; go through two halves.
      word = static_cast<unsigned long>(w >> 32);
      word <<= 32;
      word += static_cast<unsigned long>(w & 0xFFFFFFFFULL);
      value <<= 64;
      value += word;
    }
    value >>= drop;
    if (value < bound) return value;
  }
}

}  // namespace gapart
