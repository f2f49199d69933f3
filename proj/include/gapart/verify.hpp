#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gapart/denumerant.hpp"
#include "gapart/enumerate.hpp"
#include "gapart/injections.hpp"
#include "gapart/params.hpp"
#include "gapart/rng.hpp"
#include "gapart/series.hpp"
#include "gapart/thresholds.hpp"

namespace gapart {

// ---- counting inequality f_{L,s,k}(n) >= c_{L,s,2}(n) ----------------------

struct InequalityReport {
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::vector<std::int64_t> violations;  ///< every n in range with f(n) < c(n)
};

inline InequalityReport scan_inequality(const GapParams& params, std::int64_t n_min, std::int64_t n_max) {
  if (n_min < 0 || n_max < n_min) throw PreconditionError("requires 0 <= n_min <= n_max");
  const auto N = static_cast<std::size_t>(n_max);
  const auto f = f_counts(params, N);
  const auto c = c_counts(params, N);
  InequalityReport report{n_min, n_max, {}};
  for (auto n = n_min; n <= n_max; ++n) {
    if (f[static_cast<std::size_t>(n)] < c[static_cast<std::size_t>(n)]) report.violations.push_back(n);
  }
  return report;
}

/// Largest n in [1, N] with f(n) < c(n), found from the denumerant tables and
/// again from the generating functions. The largest violation is a lower
/// bound on any valid threshold M; nothing is claimed beyond N.
struct ThresholdReport {
  std::size_t horizon = 0;
  std::optional<std::int64_t> last_violation_dp;
  std::optional<std::int64_t> last_violation_series;
  bool agree() const { return last_violation_dp == last_violation_series; }
};

inline ThresholdReport threshold_search(const GapParams& params, std::size_t N) {
  ThresholdReport report;
  report.horizon = N;
  const auto f = f_counts(params, N);
  const auto c = c_counts(params, N);
  const auto fs = series_f(params, N);
  const auto cs = series_c(params, N);
  for (std::size_t n = N; n >= 1; --n) {
    if (!report.last_violation_dp && f[n] < c[n]) report.last_violation_dp = static_cast<std::int64_t>(n);
    if (!report.last_violation_series && fs[n] < cs[n]) report.last_violation_series = static_cast<std::int64_t>(n);
    if (report.last_violation_dp && report.last_violation_series) break;
  }
  return report;
}

// ---- per-element injection checks --------------------------------------------

/// Outcome of running one alpha through phi and back through psi.
struct ElementCheck {
  std::optional<ClassLabel> label;
  bool unique_class = false;     ///< exactly one of C1..C5 holds, and it is classify_C's answer
  bool weight_preserved = false;
  bool in_F = false;             ///< phi(alpha) is in F_{L,s,k}(n)
  bool declared_class = false;   ///< phi(alpha) is in F^i for alpha in C^i, and in no other F^j
  bool aux_consistent = false;   ///< the branch's auxiliary integers satisfy their defining relations
  bool round_trip = false;       ///< psi(phi(alpha)) == alpha
  std::string failure;           ///< first failure message, empty when ok()
  Partition image;

  bool ok() const {
    return unique_class && weight_preserved && in_F && declared_class && aux_consistent && round_trip;
  }
};

/// Checks the recorded auxiliaries against the relations their branch defines.
inline bool aux_relations_hold(const InjectionTrace& trace, const GapParams& params) {
  const auto s = params.s();
  const auto& aux = trace.aux;
  auto get = [&](const char* name) -> std::int64_t {
    auto it = aux.find(name);
    return it == aux.end() ? -1 : it->second;
  };
  switch (trace.label.index) {
    case 1: {
      const auto a = get("a");
      return a >= 2 && a <= params.r() + 1 && trace.input.multiplicity(a * s) >= 1;
    }
    case 2: {
      const auto j = get("j");
      return j >= s + 1 && j <= thresholds::small_part_cap(s) && trace.input.multiplicity(j) >= s;
    }
    case 3: {
      const auto j = get("j"), c = get("c"), d = get("d"), x = get("x"), y = get("y");
      return j == c * s + d && d >= 1 && d <= s - 1 && c >= 2 * s + 5 && (y == 0 || y == 1) && x >= 0 &&
             2 * x + 3 * y == c - s - d - 2 && j >= thresholds::large_part_floor(s) &&
             j == s + (s + 1) * (s + d) + s * (c - s - d - 2);
    }
    default:
      return params.k() == get("r") * s + get("t") && get("t") >= 0 && get("t") < s;
  }
}

inline ElementCheck check_injection(const Partition& alpha, const GapParams& params) {
  ElementCheck out;
  try {
    using Pred = bool (*)(const Partition&, const GapParams&);
    static constexpr std::array<Pred, 5> preds{in_C1, in_C2, in_C3, in_C4, in_C5};
    int matches = 0;
    int matched = 0;
    for (int i = 0; i < 5; ++i) {
      if (preds[static_cast<std::size_t>(i)](alpha, params)) {
        ++matches;
        matched = i + 1;
      }
    }
    const auto label = classify_C(alpha, params);
    out.label = label;
    out.unique_class = matches == 1 && matched == label.index;
    if (!out.unique_class) out.failure = "classification not unique";

    const auto forward = phi(alpha, params);
    out.image = forward.output;
    out.weight_preserved = forward.output.weight() == alpha.weight();
    out.in_F = is_member_F(forward.output, params);
    out.aux_consistent = forward.label == label && aux_relations_hold(forward, params);
    const auto classes = matching_F_classes(forward.output, params);
    out.declared_class = classes.size() == 1 && classes.front().index == label.index;
    const auto back = psi(forward.output, params);
    out.round_trip = back.output == alpha && back.label.index == label.index;

    if (out.failure.empty()) {
      if (!out.weight_preserved) out.failure = "weight changed";
      else if (!out.in_F) out.failure = "image not in F";
      else if (!out.declared_class) out.failure = "image not in exactly its declared F class";
      else if (!out.aux_consistent) out.failure = "auxiliary relations violated";
      else if (!out.round_trip) out.failure = "psi(phi(alpha)) != alpha";
    }
  } catch (const std::exception& e) {
    out.failure = e.what();
  }
  if (!out.failure.empty()) out.failure += " [" + alpha.to_string() + "]";
  return out;
}

// ---- sweeps -----------------------------------------------------------------

struct InjectionSummary {
  std::array<std::uint64_t, 5> tally{};  ///< elements per C class
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_samples;  ///< first few messages

  // Exhaustive sweeps only.
  std::uint64_t distinct_images = 0;
  std::uint64_t f_members = 0;       ///< members of F(n) classified for disjointness
  std::uint64_t f_overlaps = 0;      ///< members lying in two or more F classes
  std::uint64_t count_mismatches = 0;  ///< n where the enumeration length differs from c(n)

  bool ok() const { return failures == 0 && f_overlaps == 0 && count_mismatches == 0; }

  void record(const ElementCheck& check) {
    ++checked;
    if (check.label) ++tally[static_cast<std::size_t>(check.label->index - 1)];
    if (!check.ok()) {
      ++failures;
      if (failure_samples.size() < 10) failure_samples.push_back(check.failure);
    }
  }
};

namespace detail {
inline void require_injection_regime(const GapParams& params, std::int64_t n_min) {
  if (!params.strong_regime()) throw PreconditionError("requires L >= 2s^3+5s^2+1");
  if (n_min < thresholds::strong_min_weight(params.s())) {
    throw PreconditionError("requires n >= 2s^5+8s^4+s^3-14s^2+3s+1 (= " +
                            std::to_string(thresholds::strong_min_weight(params.s())) + ")");
  }
}
}  // namespace detail

/// Every alpha in C(n) for n in [n_min, n_max]: per-element checks, global
/// injectivity (distinct images == domain size) and F-class disjointness over
/// all of F(n).
inline InjectionSummary verify_exhaustive(const GapParams& params, std::int64_t n_min, std::int64_t n_max) {
  detail::require_injection_regime(params, n_min);
  InjectionSummary summary;
  const auto counts = c_counts(params, static_cast<std::size_t>(n_max));
  for (auto n = n_min; n <= n_max; ++n) {
    std::set<Partition> images;
    std::uint64_t domain = 0;
    for_each_C(params, n, [&](const PartitionView& view) {
      const auto check = check_injection(view.to_partition(), params);
      summary.record(check);
      images.insert(check.image);
      ++domain;
    });
    if (BigInt(static_cast<unsigned long>(domain)) != counts[static_cast<std::size_t>(n)]) ++summary.count_mismatches;
    summary.distinct_images += images.size();
    if (images.size() != domain) {
      ++summary.failures;
      if (summary.failure_samples.size() < 10) {
        summary.failure_samples.push_back("n=" + std::to_string(n) + ": " + std::to_string(images.size()) +
                                          " distinct images for " + std::to_string(domain) + " inputs");
      }
    }
    for_each_F(params, n, [&](const PartitionView& view) {
      ++summary.f_members;
      if (matching_F_classes(view.to_partition(), params).size() > 1) ++summary.f_overlaps;
    });
  }
  return summary;
}

/// `count` uniform samples from C(n) for each n in [n_min, n_max]. The stream
/// for n uses derive_seed(seed, k, n), so results do not depend on the range.
inline InjectionSummary verify_sample(const GapParams& params, std::int64_t n_min, std::int64_t n_max,
                                      std::uint64_t seed, std::size_t count) {
  detail::require_injection_regime(params, n_min);
  InjectionSummary summary;
  for (auto n = n_min; n <= n_max; ++n) {
    const CUnranker unranker(params, n);
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(params.k()), static_cast<std::uint64_t>(n)));
    for (std::size_t i = 0; i < count; ++i) {
      summary.record(check_injection(unranker.unrank(uniform_below(unranker.count(), rng)), params));
    }
  }
  return summary;
}

}  // namespace gapart
