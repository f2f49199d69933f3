#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapart/errors.hpp"
#include "gapart/params.hpp"
#include "gapart/partition.hpp"
#include "gapart/thresholds.hpp"

// Explicit injection C_{L,s,2}(n) -> F_{L,s,k}(n) in the strong regime
// L >= 2s^3+5s^2+1, n >= 2s^5+8s^4+s^3-14s^2+3s+1. C splits into five
// classes C1..C5, each mapped by its own phi_i into the matching class F^i;
// psi_i undoes phi_i on its image.
namespace gapart {

enum class Family { C, F };

struct ClassLabel {
  Family family;
  int index;  // 1..5

  std::string to_string() const { return (family == Family::C ? "C" : "F") + std::to_string(index); }

  static ClassLabel parse(const std::string& text) {
    if (text.size() == 2 && (text[0] == 'C' || text[0] == 'F') && text[1] >= '1' && text[1] <= '5') {
      return {text[0] == 'C' ? Family::C : Family::F, text[1] - '0'};
    }
    throw PreconditionError("unknown class label '" + text + "'");
  }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// One application of a phi_i (label in the C family) or psi_i (label in the
/// F family), with the auxiliary integers the branch computed.
struct InjectionTrace {
  ClassLabel label;
  Partition input;
  Partition output;
  std::map<std::string, std::int64_t> aux;

  friend bool operator==(const InjectionTrace&, const InjectionTrace&) = default;
};

namespace detail {

inline std::string precondition(const std::string& op, const std::string& condition) {
  return op + ": requires " + condition;
}

inline void require_strong(const GapParams& params, const std::string& op) {
  if (!params.strong_regime()) throw PreconditionError(precondition(op, "L >= 2s^3+5s^2+1"));
}

/// g_{is} summed over every multiple is of s with i >= 2.
inline std::int64_t multiples_of_s_above_s(const Partition& p, std::int64_t s) {
  std::int64_t total = 0;
  for (const auto& [value, count] : p.parts()) {
    if (value >= 2 * s && value % s == 0) total += count;
  }
  return total;
}

}  // namespace detail

// ---- C-class predicates ---------------------------------------------------
// Each predicate is the literal class definition, evaluated independently of
// the others, so classification uniqueness can be tested rather than assumed.

/// f_k = 0 and f_{as} >= 1 for some a >= 2.
inline bool in_C1(const Partition& p, const GapParams& params) {
  return p.multiplicity(params.k()) == 0 && detail::multiples_of_s_above_s(p, params.s()) > 0;
}

/// f_k = 0, no multiple of s of the form as (a >= 2), and f_j >= s for some
/// j in [s+1, 2s^2+5s-1].
inline bool in_C2(const Partition& p, const GapParams& params) {
  if (p.multiplicity(params.k()) != 0 || detail::multiples_of_s_above_s(p, params.s()) != 0) return false;
  const auto cap = thresholds::small_part_cap(params.s());
  for (const auto& [value, count] : p.parts()) {
    if (value > cap) break;
    if (value >= params.s() + 1 && count >= params.s()) return true;
  }
  return false;
}

/// f_k = 0, no multiple as (a >= 2), and f_j <= s-1 for all j in [s+1, 2s^2+5s-1].
inline bool in_C3(const Partition& p, const GapParams& params) {
  if (p.multiplicity(params.k()) != 0 || detail::multiples_of_s_above_s(p, params.s()) != 0) return false;
  const auto cap = thresholds::small_part_cap(params.s());
  for (const auto& [value, count] : p.parts()) {
    if (value > cap) break;
    if (value >= params.s() + 1 && count > params.s() - 1) return false;
  }
  return true;
}

inline bool in_C4(const Partition& p, const GapParams& params) { return p.multiplicity(params.k()) >= 2; }
inline bool in_C5(const Partition& p, const GapParams& params) { return p.multiplicity(params.k()) == 1; }

/// The class of a nonempty member of C_{L,s,2}(n). Tests f_k first, then the
/// multiples of s, then the small-part window.
inline ClassLabel classify_C(const Partition& p, const GapParams& params) {
  if (!is_member_C(p, params)) throw PreconditionError("classify_C: partition is not in C_{L,s,2}");
  if (p.empty()) throw PreconditionError("classify_C: requires weight >= 1");
  const auto fk = p.multiplicity(params.k());
  if (fk >= 2) return {Family::C, 4};
  if (fk == 1) return {Family::C, 5};
  if (detail::multiples_of_s_above_s(p, params.s()) > 0) return {Family::C, 1};
  // For s = 1 every part is a multiple of s, so a nonempty partition never gets here.
  if (params.s() == 1) throw InvariantError("classify_C: classes C2/C3 are empty when s = 1");
  return in_C2(p, params) ? ClassLabel{Family::C, 2} : ClassLabel{Family::C, 3};
}

// ---- F-class predicates ---------------------------------------------------

/// r+1 >= g_s >= 2 and g_{is} = 0 for 2 <= i < g_s.
inline bool in_F1(const Partition& p, const GapParams& params) {
  const auto s = params.s();
  const auto gs = p.multiplicity(s);
  if (gs < 2 || gs > params.r() + 1) return false;
  for (std::int64_t i = 2; i < gs; ++i) {
    if (p.multiplicity(i * s) != 0) return false;
  }
  return true;
}

/// g_s = 1 and exactly one multiple is (i >= 2) occurs, exactly once.
inline bool in_F2(const Partition& p, const GapParams& params) {
  const auto s = params.s();
  if (p.multiplicity(s) != 1) return false;
  std::int64_t distinct = 0;
  for (const auto& [value, count] : p.parts()) {
    if (value >= 2 * s && value % s == 0) {
      if (count != 1) return false;
      ++distinct;
    }
  }
  return distinct == 1;
}

/// g_s = 1 and g_{2s} + g_{3s} >= 2.
inline bool in_F3(const Partition& p, const GapParams& params) {
  const auto s = params.s();
  return p.multiplicity(s) == 1 && p.multiplicity(2 * s) + p.multiplicity(3 * s) >= 2;
}

/// g_s >= 2r-4.
inline bool in_F4(const Partition& p, const GapParams& params) {
  return p.multiplicity(params.s()) >= 2 * params.r() - 4;
}

/// g_s = r-4 and g_{2s} >= 1.
inline bool in_F5(const Partition& p, const GapParams& params) {
  return p.multiplicity(params.s()) == params.r() - 4 && p.multiplicity(2 * params.s()) >= 1;
}

/// Labels of every F class containing p (ignores the regime).
inline std::vector<ClassLabel> matching_F_classes(const Partition& p, const GapParams& params) {
  using Pred = bool (*)(const Partition&, const GapParams&);
  static constexpr std::array<Pred, 5> preds{in_F1, in_F2, in_F3, in_F4, in_F5};
  std::vector<ClassLabel> out;
  for (int i = 0; i < 5; ++i) {
    if (preds[static_cast<std::size_t>(i)](p, params)) out.push_back({Family::F, i + 1});
  }
  return out;
}

/// The unique F class of a member of F_{L,s,k}(n), or nullopt if it lies in
/// none. In the strong regime the classes are pairwise disjoint; an overlap
/// raises InvariantError.
inline std::optional<ClassLabel> classify_F(const Partition& p, const GapParams& params) {
  if (!is_member_F(p, params)) throw PreconditionError("classify_F: partition is not in F_{L,s,k}");
  detail::require_strong(params, "classify_F");
  const auto labels = matching_F_classes(p, params);
  if (labels.size() > 1) {
    std::string names;
    for (const auto& l : labels) names += (names.empty() ? "" : ",") + l.to_string();
    throw InvariantError("classify_F: F classes overlap (" + names + ") on " + p.to_string());
  }
  if (labels.empty()) return std::nullopt;
  return labels.front();
}

// ---- phi_i ------------------------------------------------------------------

namespace detail {
inline void require_class(const Partition& p, const GapParams& params, int index, const std::string& op) {
  require_strong(params, op);
  const auto label = classify_C(p, params);
  if (label.index != index) {
    throw PreconditionError(op + ": requires a partition in C" + std::to_string(index) + ", got " + label.to_string());
  }
}
}  // namespace detail

/// C1: with a the least a >= 2 having f_{as} >= 1, trade one part as for a parts s.
inline InjectionTrace phi1(const Partition& alpha, const GapParams& params) {
  detail::require_class(alpha, params, 1, "phi1");
  const auto s = params.s();
  std::int64_t a = 2;
  while (alpha.multiplicity(a * s) == 0) ++a;
  Partition beta = alpha;
  beta.remove(a * s);
  beta.add(s, a);
  return {{Family::C, 1}, alpha, std::move(beta), {{"a", a}}};
}

/// C2: with j the least part of multiplicity >= s, trade s parts j for one
/// part s and one part (j-1)s.
inline InjectionTrace phi2(const Partition& alpha, const GapParams& params) {
  detail::require_class(alpha, params, 2, "phi2");
  const auto s = params.s();
  std::int64_t j = 0;
  for (const auto& [value, count] : alpha.parts()) {
    if (count >= s) {
      j = value;
      break;
    }
  }
  if (j % s == 0) throw InvariantError("phi2: j must not be a multiple of s");
  Partition beta = alpha;
  beta.remove(j, s);
  beta.add(s);
  beta.add((j - 1) * s);
  return {{Family::C, 2}, alpha, std::move(beta), {{"j", j}}};
}

/// Unique (x, y) with 2x + 3y = m and y in {0, 1}; m >= 2.
inline std::pair<std::int64_t, std::int64_t> two_three_split(std::int64_t m) {
  if (m < 2) throw PreconditionError("two_three_split: requires m >= 2");
  const std::int64_t y = m % 2;
  return {(m - 3 * y) / 2, y};
}

/// C3: with j = cs + d the least part >= 2s^2+5s+1, use
/// j = s + (s+1)(s+d) + s(c-s-d-2) and c-s-d-2 = 2x+3y to replace j by
/// one s, s+1 copies of s+d, x copies of 2s and y copies of 3s.
inline InjectionTrace phi3(const Partition& alpha, const GapParams& params) {
  detail::require_class(alpha, params, 3, "phi3");
  const auto s = params.s();
  if (static_cast<std::int64_t>(alpha.weight()) < thresholds::strong_min_weight(s)) {
    throw PreconditionError("phi3: requires n >= 2s^5+8s^4+s^3-14s^2+3s+1");
  }
  auto it = alpha.parts().lower_bound(thresholds::large_part_floor(s));
  if (it == alpha.parts().end()) throw PreconditionError("phi3: requires a part >= 2s^2+5s+1");
  const std::int64_t j = it->first;
  const std::int64_t c = j / s;
  const std::int64_t d = j % s;
  if (d == 0) throw InvariantError("phi3: j must not be a multiple of s");
  const auto [x, y] = two_three_split(c - s - d - 2);
  Partition beta = alpha;
  beta.remove(j);
  beta.add(s);
  beta.add(s + d, s + 1);
  beta.add(2 * s, x);
  beta.add(3 * s, y);
  return {{Family::C, 3}, alpha, std::move(beta), {{"c", c}, {"d", d}, {"j", j}, {"x", x}, {"y", y}}};
}

/// C4: replace the f_k parts k by f_k(r-2) parts s and f_k parts 2s+t.
inline InjectionTrace phi4(const Partition& alpha, const GapParams& params) {
  detail::require_class(alpha, params, 4, "phi4");
  const auto s = params.s();
  const auto r = params.r();
  const auto t = params.t();
  Partition beta = alpha;
  const auto fk = beta.remove_all(params.k());
  beta.add(s, fk * (r - 2));
  beta.add(2 * s + t, fk);
  return {{Family::C, 4}, alpha, std::move(beta), {{"r", r}, {"t", t}}};
}

/// C5: replace the single part k by r-4 parts s plus 2s and 2s+t (t != 0) or
/// two parts 2s (t = 0).
inline InjectionTrace phi5(const Partition& alpha, const GapParams& params) {
  detail::require_class(alpha, params, 5, "phi5");
  const auto s = params.s();
  const auto r = params.r();
  const auto t = params.t();
  Partition beta = alpha;
  beta.remove(params.k());
  beta.add(s, r - 4);
  if (t != 0) {
    beta.add(2 * s);
    beta.add(2 * s + t);
  } else {
    beta.add(2 * s, 2);
  }
  return {{Family::C, 5}, alpha, std::move(beta), {{"r", r}, {"t", t}}};
}

/// The full injection: checks every hypothesis, then dispatches on classify_C.
inline InjectionTrace phi(const Partition& alpha, const GapParams& params) {
  const auto s = params.s();
  if (!params.strong_regime()) throw PreconditionError("phi: requires L >= 2s^3+5s^2+1");
  if (params.k() < params.L() || params.k() > s + params.L()) throw PreconditionError("phi: requires L <= k <= s+L");
  if (!is_member_C(alpha, params)) throw PreconditionError("phi: requires a partition in C_{L,s,2}");
  if (static_cast<std::int64_t>(alpha.weight()) < thresholds::strong_min_weight(s)) {
    throw PreconditionError("phi: requires n >= 2s^5+8s^4+s^3-14s^2+3s+1");
  }
  switch (classify_C(alpha, params).index) {
    case 1: return phi1(alpha, params);
    case 2: return phi2(alpha, params);
    case 3: return phi3(alpha, params);
    case 4: return phi4(alpha, params);
    default: return phi5(alpha, params);
  }
}

// ---- psi_i ------------------------------------------------------------------
// Each psi_i accepts only partitions meeting the necessary conditions for lying
// in the image of phi_i; anything else is rejected with "not in characterized image".

namespace detail {
inline void require_image(bool ok, const std::string& op, const std::string& condition) {
  if (!ok) throw PreconditionError(op + ": not in characterized image (requires " + condition + ")");
}

inline void require_F_class(const Partition& p, const GapParams& params, int index, const std::string& op) {
  require_strong(params, op);
  const auto label = classify_F(p, params);
  require_image(label && label->index == index, op, "a partition in F" + std::to_string(index));
}
}  // namespace detail

inline InjectionTrace psi1(const Partition& beta, const GapParams& params) {
  detail::require_F_class(beta, params, 1, "psi1");
  const auto s = params.s();
  const auto gs = beta.multiplicity(s);
  detail::require_image(s * gs <= params.high(), "psi1", "s*g_s <= s+L");
  detail::require_image(s * gs != params.k(), "psi1", "s*g_s != k");
  Partition alpha = beta;
  alpha.remove_all(s);
  alpha.add(s * gs);
  return {{Family::F, 1}, beta, std::move(alpha), {{"a", gs}}};
}

inline InjectionTrace psi2(const Partition& beta, const GapParams& params) {
  detail::require_F_class(beta, params, 2, "psi2");
  const auto s = params.s();
  std::int64_t i = 0;
  for (const auto& [value, count] : beta.parts()) {
    if (value >= 2 * s && value % s == 0) i = value / s;
  }
  detail::require_image(i + 1 >= s + 1 && i + 1 <= thresholds::small_part_cap(s), "psi2",
                        "s+1 <= i+1 <= 2s^2+5s-1");
  detail::require_image((i + 1) % s != 0, "psi2", "i+1 not a multiple of s");
  Partition alpha = beta;
  alpha.remove(i * s);
  alpha.remove(s);
  alpha.add(i + 1, s);
  return {{Family::F, 2}, beta, std::move(alpha), {{"i", i}}};
}

inline InjectionTrace psi3(const Partition& beta, const GapParams& params) {
  detail::require_F_class(beta, params, 3, "psi3");
  const auto s = params.s();
  std::int64_t i = 0;
  int found = 0;
  for (auto v = s + 1; v <= 2 * s - 1; ++v) {
    if (beta.multiplicity(v) >= s + 1) {
      i = v;
      ++found;
    }
  }
  detail::require_image(found == 1, "psi3", "a unique i in [s+1, 2s-1] with g_i >= s+1");
  const auto g2 = beta.multiplicity(2 * s);
  const auto g3 = beta.multiplicity(3 * s);
  const std::int64_t w = s + 2 * s * g2 + 3 * s * g3 + i * (s + 1);
  detail::require_image(w <= params.high(), "psi3", "w <= s+L");
  detail::require_image(w != params.k(), "psi3", "w != k");
  Partition alpha = beta;
  alpha.remove(s);
  alpha.remove_all(2 * s);
  alpha.remove_all(3 * s);
  alpha.remove(i, s + 1);
  alpha.add(w);
  return {{Family::F, 3}, beta, std::move(alpha), {{"i", i}, {"w", w}}};
}

inline InjectionTrace psi4(const Partition& beta, const GapParams& params) {
  detail::require_F_class(beta, params, 4, "psi4");
  const auto s = params.s();
  const auto r = params.r();
  const auto t = params.t();
  const auto gs = beta.multiplicity(s);
  detail::require_image(gs % (r - 2) == 0, "psi4", "g_s divisible by r-2");
  const auto q = gs / (r - 2);
  detail::require_image(beta.multiplicity(2 * s + t) >= q, "psi4", "g_{2s+t} >= g_s/(r-2)");
  Partition alpha = beta;
  alpha.remove_all(s);
  alpha.remove(2 * s + t, q);
  alpha.add(params.k(), q);
  return {{Family::F, 4}, beta, std::move(alpha), {{"r", r}, {"t", t}}};
}

inline InjectionTrace psi5(const Partition& beta, const GapParams& params) {
  detail::require_F_class(beta, params, 5, "psi5");
  const auto s = params.s();
  const auto r = params.r();
  const auto t = params.t();
  Partition alpha = beta;
  alpha.remove_all(s);
  if (t != 0) {
    detail::require_image(beta.multiplicity(2 * s + t) >= 1, "psi5", "g_{2s+t} >= 1");
    alpha.remove(2 * s);
    alpha.remove(2 * s + t);
  } else {
    detail::require_image(beta.multiplicity(2 * s) >= 2, "psi5", "g_{2s} >= 2");
    alpha.remove(2 * s, 2);
  }
  alpha.add(params.k());
  return {{Family::F, 5}, beta, std::move(alpha), {{"r", r}, {"t", t}}};
}

/// Left inverse of phi: classifies beta among F1..F5 and applies that psi_i.
inline InjectionTrace psi(const Partition& beta, const GapParams& params) {
  detail::require_strong(params, "psi");
  const auto label = classify_F(beta, params);
  detail::require_image(label.has_value(), "psi", "a partition in one of F1..F5");
  switch (label->index) {
    case 1: return psi1(beta, params);
    case 2: return psi2(beta, params);
    case 3: return psi3(beta, params);
    case 4: return psi4(beta, params);
    default: return psi5(beta, params);
  }
}

}  // namespace gapart
