#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gapart/bigint.hpp"
#include "gapart/errors.hpp"
#include "gapart/params.hpp"

namespace gapart {

/// A finite set of coin denominations a_1 < ... < a_m.
///
/// Construction accepts any list of positive integers; order and duplicates
/// are normalized away, so the set is what matters.
class CoinSystem {
 public:
  explicit CoinSystem(std::vector<std::int64_t> denominations) : coins_(std::move(denominations)) {
    if (coins_.empty()) throw PreconditionError("coin system needs at least one denomination");
    std::sort(coins_.begin(), coins_.end());
    coins_.erase(std::unique(coins_.begin(), coins_.end()), coins_.end());
    if (coins_.front() < 1) throw PreconditionError("denominations must be >= 1");
    gcd_ = 0;
    for (auto a : coins_) gcd_ = std::gcd(gcd_, a);
  }

  /// The window {low, low+1, ..., high} with `excluded` removed.
  static CoinSystem range_without(std::int64_t low, std::int64_t high, std::int64_t excluded) {
    std::vector<std::int64_t> coins;
    for (auto a = low; a <= high; ++a) {
      if (a != excluded) coins.push_back(a);
    }
    return CoinSystem(std::move(coins));
  }

  const std::vector<std::int64_t>& denominations() const noexcept { return coins_; }
  std::size_t size() const noexcept { return coins_.size(); }
  std::int64_t gcd() const noexcept { return gcd_; }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < coins_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coins_[i]);
    }
    return out + "}";
  }

 private:
  std::vector<std::int64_t> coins_;
  std::int64_t gcd_ = 0;
};

/// p[n] for n = 0..N: the number of nonnegative solutions of
/// a_1 x_1 + ... + a_m x_m = n. One pass per denomination, O(m N) additions.
inline BigVector denumerant_table(const CoinSystem& coins, std::size_t N) {
  BigVector p(N + 1);
  p[0] = 1;
  for (auto a : coins.denominations()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t n = step; n <= N; ++n) p[n] += p[n - step];
  }
  return p;
}

/// Leading term n^(m-1) / ((m-1)! a_1 ... a_m) of the denumerant.
/// Only meaningful for gcd(A) = 1; other systems are rejected.
inline double asymptotic_estimate(const CoinSystem& coins, std::int64_t n) {
  if (coins.gcd() != 1) {
    throw PreconditionError("asymptotic estimate requires gcd(A) = 1, got gcd " +
                            std::to_string(coins.gcd()));
  }
  if (n < 1) throw PreconditionError("asymptotic estimate requires n >= 1");
  const auto m = coins.size();
  double value = 1.0;
  for (std::size_t i = 1; i < m; ++i) value *= static_cast<double>(n) / static_cast<double>(i);
  for (auto a : coins.denominations()) value /= static_cast<double>(a);
  return value;
}

/// p_A(n) divided by its leading-term estimate.
inline double ratio_check(const CoinSystem& coins, std::int64_t n) {
  const double estimate = asymptotic_estimate(coins, n);
  const auto table = denumerant_table(coins, static_cast<std::size_t>(n));
  return to_double(table.back()) / estimate;
}

/// f_{L,s,k}(n) for n = 0..N via f(n) = p_{A \ {k}}(n - s), A = {s, ..., s+L}.
inline BigVector f_counts(const GapParams& params, std::size_t N) {
  BigVector f(N + 1);
  const auto s = static_cast<std::size_t>(params.s());
  if (N < s) return f;
  const auto p = denumerant_table(CoinSystem::range_without(params.s(), params.high(), params.k()), N - s);
  for (std::size_t n = s; n <= N; ++n) f[n] = p[n - s];
  return f;
}

/// c_{L,s,2}(n) for n = 0..N via c(n) = p_{A \ {s}}(n).
inline BigVector c_counts(const GapParams& params, std::size_t N) {
  return denumerant_table(CoinSystem::range_without(params.s(), params.high(), params.s()), N);
}

}  // namespace gapart
