#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "gapart/errors.hpp"
#include "gapart/thresholds.hpp"

namespace gapart {

/// The triple (L, s, k): parts of C live in [s+1, s+L]; parts of F live in
/// [s, s+L] with s forced and k forbidden.
///
/// Valid triples satisfy L >= 3, s >= 1 and max(s+1, L) <= k <= s+L. The
/// derived pair (r, t) is the division k = r*s + t with 0 <= t < s.
class GapParams {
 public:
  /// Throws PreconditionError naming the first violated constraint.
  static GapParams make(std::int64_t L, std::int64_t s, std::int64_t k) {
    if (L < 3) throw PreconditionError("requires L >= 3");
    if (s < 1) throw PreconditionError("requires s >= 1");
    if (k < std::max(s + 1, L)) throw PreconditionError("requires k >= max(s+1, L)");
    if (k > s + L) throw PreconditionError("requires k <= s+L");
    return GapParams(L, s, k);
  }

  /// Parameters for C-only work, where k is irrelevant: picks k = max(s+1, L).
  static GapParams for_c(std::int64_t L, std::int64_t s) {
    return make(L, s, std::max(s + 1, L));
  }

  std::int64_t L() const noexcept { return L_; }
  std::int64_t s() const noexcept { return s_; }
  std::int64_t k() const noexcept { return k_; }
  std::int64_t r() const noexcept { return k_ / s_; }
  std::int64_t t() const noexcept { return k_ % s_; }

  /// Smallest and largest part allowed in C.
  std::int64_t c_low() const noexcept { return s_ + 1; }
  std::int64_t high() const noexcept { return s_ + L_; }

  /// L >= 2s^3+5s^2+1. Implies k >= L, so k lies in [L, s+L].
  bool strong_regime() const noexcept { return L_ >= thresholds::strong_min_L(s_); }

  std::string to_string() const {
    return "L=" + std::to_string(L_) + ",s=" + std::to_string(s_) + ",k=" + std::to_string(k_);
  }

  friend bool operator==(const GapParams&, const GapParams&) = default;

 private:
  GapParams(std::int64_t L, std::int64_t s, std::int64_t k) : L_(L), s_(s), k_(k) {}

  std::int64_t L_;
  std::int64_t s_;
  std::int64_t k_;
};

}  // namespace gapart
