#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "gapart/bigint.hpp"
#include "gapart/denumerant.hpp"
#include "gapart/errors.hpp"
#include "gapart/params.hpp"
#include "gapart/partition.hpp"
#include "gapart/rng.hpp"

namespace gapart {

/// Read-only view of the enumerator's working state: `values` in decreasing
/// order and the multiplicity currently assigned to each. Valid only inside
/// the visitor call.
class PartitionView {
 public:
  PartitionView(std::span<const std::int64_t> values, std::span<const std::int64_t> mults) noexcept
      : values_(values), mults_(mults) {}

  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::span<const std::int64_t> multiplicities() const noexcept { return mults_; }

  Partition to_partition() const {
    Partition p;
    for (std::size_t i = 0; i < values_.size(); ++i) p.add(values_[i], mults_[i]);
    return p;
  }

 private:
  std::span<const std::int64_t> values_;
  std::span<const std::int64_t> mults_;
};

namespace detail {

// Depth-first walk over multiplicity vectors. Values are visited from largest
// to smallest and each multiplicity from high to low, which yields the
// descending lexicographic order of the part sequences. The last value's
// multiplicity is forced by the remainder.
template <class Visitor>
class PartitionWalker {
 public:
  PartitionWalker(std::vector<std::int64_t> values_desc, bool last_required, Visitor& visit)
      : values_(std::move(values_desc)), mults_(values_.size(), 0), last_required_(last_required), visit_(visit) {}

  void run(std::int64_t n) {
    if (values_.empty()) {
      if (n == 0 && !last_required_) visit_(PartitionView(values_, mults_));
      return;
    }
    step(0, n);
  }

 private:
  void step(std::size_t idx, std::int64_t rem) {
    const std::size_t last = values_.size() - 1;
    if (idx == last) {
      leaf(rem);
      return;
    }
    const std::int64_t v = values_[idx];
    if (idx + 1 == last) {
      // Second-to-last value: inline the forced last level.
      const std::int64_t w = values_[last];
      for (std::int64_t m = rem / v; m >= 0; --m) {
        const std::int64_t r = rem - m * v;
        if (r % w != 0) continue;
        const std::int64_t q = r / w;
        if (last_required_ && q == 0) continue;
        mults_[idx] = m;
        mults_[last] = q;
        visit_(PartitionView(values_, mults_));
      }
      mults_[idx] = 0;
      mults_[last] = 0;
      return;
    }
    for (std::int64_t m = rem / v; m >= 0; --m) {
      mults_[idx] = m;
      step(idx + 1, rem - m * v);
    }
    mults_[idx] = 0;
  }

  void leaf(std::int64_t rem) {
    const std::size_t last = values_.size() - 1;
    const std::int64_t w = values_[last];
    if (rem % w != 0) return;
    const std::int64_t q = rem / w;
    if (last_required_ && q == 0) return;
    mults_[last] = q;
    visit_(PartitionView(values_, mults_));
    mults_[last] = 0;
  }

  std::vector<std::int64_t> values_;
  std::vector<std::int64_t> mults_;
  bool last_required_;
  Visitor& visit_;
};

inline std::vector<std::int64_t> c_values_desc(const GapParams& params) {
  std::vector<std::int64_t> values;
  for (auto v = params.high(); v >= params.c_low(); --v) values.push_back(v);
  return values;
}

inline std::vector<std::int64_t> f_values_desc(const GapParams& params) {
  std::vector<std::int64_t> values;
  for (auto v = params.high(); v >= params.s(); --v) {
    if (v != params.k()) values.push_back(v);
  }
  return values;
}

}  // namespace detail

/// Calls `visit(const PartitionView&)` once per member of C_{L,s,2}(n), in
/// canonical order, without materializing partitions.
template <class Visitor>
void for_each_C(const GapParams& params, std::int64_t n, Visitor&& visit) {
  if (n < 0) return;
  detail::PartitionWalker<std::remove_reference_t<Visitor>> walker(detail::c_values_desc(params), false, visit);
  walker.run(n);
}

/// Same for F_{L,s,k}(n). The smallest value in the walk is s, which must occur.
template <class Visitor>
void for_each_F(const GapParams& params, std::int64_t n, Visitor&& visit) {
  if (n < params.s()) return;
  detail::PartitionWalker<std::remove_reference_t<Visitor>> walker(detail::f_values_desc(params), true, visit);
  walker.run(n);
}

inline std::vector<Partition> enumerate_C(const GapParams& params, std::int64_t n) {
  std::vector<Partition> out;
  for_each_C(params, n, [&](const PartitionView& view) { out.push_back(view.to_partition()); });
  return out;
}

inline std::vector<Partition> enumerate_F(const GapParams& params, std::int64_t n) {
  std::vector<Partition> out;
  for_each_F(params, n, [&](const PartitionView& view) { out.push_back(view.to_partition()); });
  return out;
}

/// c_{L,s,2}(0..N), exact. Delegates to the denumerant reduction.
inline BigVector count_table_C(const GapParams& params, std::size_t N) { return c_counts(params, N); }

/// f_{L,s,k}(0..N), exact; zero below s.
inline BigVector count_table_F(const GapParams& params, std::size_t N) { return f_counts(params, N); }

/// Maps indices in [0, c(n)) onto C_{L,s,2}(n) in canonical order.
///
/// suffix_[i][m] counts partitions of m using only the i-th and smaller
/// values, so each step of the walk can skip whole subtrees by count.
class CUnranker {
 public:
  CUnranker(const GapParams& params, std::int64_t n) : values_(detail::c_values_desc(params)), n_(n) {
    if (n < 0) throw PreconditionError("requires n >= 0");
    const auto width = static_cast<std::size_t>(n) + 1;
    suffix_.assign(values_.size() + 1, BigVector(width));
    suffix_[values_.size()][0] = 1;
    for (std::size_t i = values_.size(); i-- > 0;) {
      const auto v = static_cast<std::size_t>(values_[i]);
      auto& row = suffix_[i];
      row = suffix_[i + 1];
      for (std::size_t m = v; m < width; ++m) row[m] += row[m - v];
    }
  }

  const BigInt& count() const noexcept { return suffix_[0][static_cast<std::size_t>(n_)]; }

  Partition unrank(BigInt index) const {
    if (sgn(index) < 0 || index >= count()) {
      throw std::out_of_range("unrank index " + to_decimal(index) + " outside [0, " + to_decimal(count()) + ")");
    }
    Partition p;
    std::int64_t rem = n_;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const std::int64_t v = values_[i];
      for (std::int64_t m = rem / v; m >= 0; --m) {
        const BigInt& block = suffix_[i + 1][static_cast<std::size_t>(rem - m * v)];
        if (index < block) {
          p.add(v, m);
          rem -= m * v;
          break;
        }
        index -= block;
      }
    }
    if (rem != 0) throw InvariantError("unranking did not exhaust the weight");
    return p;
  }

 private:
  std::vector<std::int64_t> values_;
  std::int64_t n_;
  std::vector<BigVector> suffix_;
};

inline Partition unrank_C(const GapParams& params, std::int64_t n, const BigInt& index) {
  return CUnranker(params, n).unrank(index);
}

/// `count` independent uniform draws from C_{L,s,2}(n): a SplitMix64 stream
/// seeded with `seed` feeds uniform_below(c(n)), and each index is unranked.
inline std::vector<Partition> sample_C(const GapParams& params, std::int64_t n, std::uint64_t seed,
                                       std::size_t count) {
  std::vector<Partition> out;
  if (count == 0) return out;
  const CUnranker unranker(params, n);
  if (sgn(unranker.count()) == 0) throw PreconditionError("cannot sample from an empty C_{L,s,2}(n)");
  SplitMix64 rng(seed);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(unranker.unrank(uniform_below(unranker.count(), rng)));
  return out;
}

}  // namespace gapart
