#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapart/bigint.hpp"
#include "gapart/errors.hpp"
#include "gapart/params.hpp"

namespace gapart {

/// Exact power series c_0 + c_1 q + ... + c_N q^N truncated at horizon N.
///
/// Binary operations on series with different horizons truncate to the
/// smaller one and set clipped() on the result.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t horizon) : coeffs_(horizon + 1) {}

  explicit TruncatedSeries(BigVector coeffs, bool clipped = false) : coeffs_(std::move(coeffs)), clipped_(clipped) {
    if (coeffs_.empty()) throw PreconditionError("a truncated series needs at least one coefficient");
  }

  static TruncatedSeries one(std::size_t horizon) { return monomial(horizon, 0, 1); }

  /// coeff * q^exponent, or zero if the exponent is beyond the horizon.
  static TruncatedSeries monomial(std::size_t horizon, std::size_t exponent, const BigInt& coeff) {
    TruncatedSeries x(horizon);
    if (exponent <= horizon) x.coeffs_[exponent] = coeff;
    return x;
  }

  std::size_t horizon() const noexcept { return coeffs_.size() - 1; }
  bool clipped() const noexcept { return clipped_; }
  const BigVector& coefficients() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  friend TruncatedSeries add(const TruncatedSeries& x, const TruncatedSeries& y) {
    const auto N = std::min(x.horizon(), y.horizon());
    BigVector out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) out[n] = x.coeffs_[n] + y.coeffs_[n];
    return TruncatedSeries(std::move(out), mismatch(x, y));
  }

  friend TruncatedSeries subtract(const TruncatedSeries& x, const TruncatedSeries& y) {
    const auto N = std::min(x.horizon(), y.horizon());
    BigVector out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) out[n] = x.coeffs_[n] - y.coeffs_[n];
    return TruncatedSeries(std::move(out), mismatch(x, y));
  }

  /// Cauchy product, quadratic time. Sparse left factors are skipped.
  friend TruncatedSeries multiply(const TruncatedSeries& x, const TruncatedSeries& y) {
    const auto N = std::min(x.horizon(), y.horizon());
    BigVector out(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
      if (sgn(x.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; i + j <= N; ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    return TruncatedSeries(std::move(out), mismatch(x, y));
  }

  /// x / (1 - q^m): y[n] = x[n] + y[n-m].
  friend TruncatedSeries mul_geometric(TruncatedSeries x, std::int64_t m) {
    if (m < 1) throw PreconditionError("mul_geometric requires m >= 1");
    const auto step = static_cast<std::size_t>(m);
    for (std::size_t n = step; n < x.coeffs_.size(); ++n) x.coeffs_[n] += x.coeffs_[n - step];
    return x;
  }

  /// x * (1 - q^m).
  friend TruncatedSeries mul_binomial(TruncatedSeries x, std::int64_t m) {
    if (m < 1) throw PreconditionError("mul_binomial requires m >= 1");
    const auto step = static_cast<std::size_t>(m);
    for (std::size_t n = x.coeffs_.size(); n-- > step;) x.coeffs_[n] -= x.coeffs_[n - step];
    return x;
  }

  /// x * q^r.
  friend TruncatedSeries shift(const TruncatedSeries& x, std::size_t r) {
    TruncatedSeries out(x.horizon());
    out.clipped_ = x.clipped_;
    for (std::size_t n = r; n <= x.horizon(); ++n) out.coeffs_[n] = x.coeffs_[n - r];
    return out;
  }

 private:
  static bool mismatch(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.clipped_ || y.clipped_ || x.horizon() != y.horizon();
  }

  BigVector coeffs_;
  bool clipped_ = false;
};

/// 1 / prod_{i=0}^{count-1} (1 - q^{start+i}); coefficient n counts the
/// partitions of n into parts from [start, start+count-1].
inline TruncatedSeries pochhammer_inverse(std::int64_t start, std::int64_t count, std::size_t N) {
  if (start < 1 || count < 1) throw PreconditionError("pochhammer_inverse requires start >= 1 and count >= 1");
  auto x = TruncatedSeries::one(N);
  for (auto m = start; m < start + count; ++m) x = mul_geometric(std::move(x), m);
  return x;
}

/// sum c_{L,s,2}(n) q^n = 1/(q^{s+1};q)_L.
inline TruncatedSeries series_c(const GapParams& params, std::size_t N) {
  return pochhammer_inverse(params.s() + 1, params.L(), N);
}

/// sum f_{L,s,k}(n) q^n = q^s (1 - q^k) / (q^s;q)_{L+1}.
inline TruncatedSeries series_f(const GapParams& params, std::size_t N) {
  auto x = pochhammer_inverse(params.s(), params.L() + 1, N);
  x = mul_binomial(std::move(x), params.k());
  return shift(x, static_cast<std::size_t>(params.s()));
}

struct AbcSeries {
  TruncatedSeries a;  ///< (1-q) / (q^s;q)_{L+1}
  TruncatedSeries b;  ///< 1 / ((1-q^s)(q^{s+2};q)_{L-1})
  TruncatedSeries c;  ///< 1 / (q^{s+1};q)_L
};

namespace detail {
inline void check_family_params(std::int64_t s, std::int64_t L) {
  if (s < 1) throw PreconditionError("requires s >= 1");
  if (L < 3) throw PreconditionError("requires L >= 3");
}
}  // namespace detail

inline AbcSeries series_abc(std::int64_t s, std::int64_t L, std::size_t N) {
  detail::check_family_params(s, L);
  auto a = mul_binomial(pochhammer_inverse(s, L + 1, N), 1);
  auto b = mul_geometric(pochhammer_inverse(s + 2, L - 1, N), s);
  auto c = pochhammer_inverse(s + 1, L, N);
  return {std::move(a), std::move(b), std::move(c)};
}

/// sum d_k(n) q^n = (1 - q^k) / (q^s;q)_{L+1}.
inline TruncatedSeries series_d(std::int64_t k, std::int64_t s, std::int64_t L, std::size_t N) {
  detail::check_family_params(s, L);
  if (k < 1) throw PreconditionError("requires k >= 1");
  return mul_binomial(pochhammer_inverse(s, L + 1, N), k);
}

/// sum e_{k,r}(n) q^n = q^r (1 - q^k) / (q^s;q)_{L+1}, i.e. d_k shifted by r.
inline TruncatedSeries series_e(std::int64_t k, std::int64_t r, std::int64_t s, std::int64_t L, std::size_t N) {
  if (r < 0) throw PreconditionError("requires r >= 0");
  const auto d = series_d(k, s, L, N);
  auto e = shift(d, static_cast<std::size_t>(r));
  for (auto n = static_cast<std::size_t>(r); n <= N; ++n) {
    if (e[n] != d[n - static_cast<std::size_t>(r)]) throw InvariantError("e_{k,r}(n) != d_k(n-r)");
  }
  return e;
}

namespace detail {
inline void check_h_params(std::int64_t L, std::int64_t s, std::int64_t r, std::int64_t k1, std::int64_t k2) {
  if (L < 3) throw PreconditionError("requires L >= 3");
  if (s < 1) throw PreconditionError("requires s >= 1");
  if (r < 0) throw PreconditionError("requires r >= 0");
  if (k2 < 1) throw PreconditionError("requires k2 >= 1");
  if (k1 <= k2) throw PreconditionError("requires k1 > k2");
}
}  // namespace detail

/// H* from its numerator q^r - q^{r+k1} - 1 + q^{k2} divided by (q^s;q)_{L+1}.
inline TruncatedSeries series_H_direct(std::int64_t L, std::int64_t s, std::int64_t r, std::int64_t k1,
                                       std::int64_t k2, std::size_t N) {
  detail::check_h_params(L, s, r, k1, k2);
  BigVector numerator(N + 1);
  auto bump = [&](std::int64_t exponent, int sign) {
    if (static_cast<std::size_t>(exponent) <= N) numerator[static_cast<std::size_t>(exponent)] += sign;
  };
  bump(r, +1);
  bump(r + k1, -1);
  bump(0, -1);
  bump(k2, +1);
  TruncatedSeries x(std::move(numerator));
  for (auto m = s; m <= s + L; ++m) x = mul_geometric(std::move(x), m);
  return x;
}

/// H* as e_{k1,r} - d_{k2}.
inline TruncatedSeries series_H_split(std::int64_t L, std::int64_t s, std::int64_t r, std::int64_t k1,
                                      std::int64_t k2, std::size_t N) {
  detail::check_h_params(L, s, r, k1, k2);
  return subtract(series_e(k1, r, s, L, N), series_d(k2, s, L, N));
}

/// H*_{L,s,r,k1,k2}, built both ways; throws InvariantError if they differ.
inline TruncatedSeries series_H(std::int64_t L, std::int64_t s, std::int64_t r, std::int64_t k1, std::int64_t k2,
                                std::size_t N) {
  auto direct = series_H_direct(L, s, r, k1, k2, N);
  if (direct != series_H_split(L, s, r, k1, k2, N)) {
    throw InvariantError("H* construction paths disagree");
  }
  return direct;
}

/// Largest n in [start, N] with coefficient <= 0, or nullopt if every
/// coefficient there is positive. Says nothing beyond the horizon.
inline std::optional<std::size_t> positivity_scan(const TruncatedSeries& x, std::size_t start) {
  if (start > x.horizon()) throw PreconditionError("positivity scan start exceeds the horizon");
  for (std::size_t n = x.horizon() + 1; n-- > start;) {
    if (sgn(x[n]) <= 0) return n;
  }
  return std::nullopt;
}

}  // namespace gapart
