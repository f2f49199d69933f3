#pragma once

#include <cstdint>

// Every constant of the strong regime lives here so each precondition check
// cites the same formula.
namespace gapart::thresholds {

/// Smallest L for which the explicit injection is defined: 2s^3+5s^2+1.
constexpr std::int64_t strong_min_L(std::int64_t s) { return 2 * s * s * s + 5 * s * s + 1; }

/// Smallest weight n covered by the explicit injection: 2s^5+8s^4+s^3-14s^2+3s+1.
constexpr std::int64_t strong_min_weight(std::int64_t s) {
  const std::int64_t s2 = s * s;
  const std::int64_t s3 = s2 * s;
  return 2 * s3 * s2 + 8 * s2 * s2 + s3 - 14 * s2 + 3 * s + 1;
}

/// Upper end of the "small part" window [s+1, 2s^2+5s-1] used by classes C2/C3.
constexpr std::int64_t small_part_cap(std::int64_t s) { return 2 * s * s + 5 * s - 1; }

/// First part value searched for by the third injection: 2s^2+5s+1.
constexpr std::int64_t large_part_floor(std::int64_t s) { return 2 * s * s + 5 * s + 1; }

/// Lower bound on r = floor(k/s) implied by the strong regime: 2s^2+5s.
constexpr std::int64_t strong_min_r(std::int64_t s) { return 2 * s * s + 5 * s; }

static_assert(strong_min_L(1) == 8);
static_assert(strong_min_L(2) == 37);
static_assert(strong_min_weight(1) == 1);
static_assert(strong_min_weight(2) == 151);
static_assert(strong_min_weight(3) == 1045);

}  // namespace gapart::thresholds
