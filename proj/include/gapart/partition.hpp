#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "gapart/errors.hpp"
#include "gapart/params.hpp"

namespace gapart {

/// A partition stored as a map from part value to multiplicity.
///
/// Zero multiplicities are never stored, so two partitions are equal iff their
/// maps are equal. The empty map is the unique partition of 0.
class Partition {
 public:
  using Part = std::int64_t;
  using Mult = std::int64_t;
  using Map = std::map<Part, Mult>;

  Partition() = default;

  Partition(std::initializer_list<std::pair<const Part, Mult>> parts) {
    for (const auto& [value, count] : parts) add(value, count);
  }

  const Map& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }

  Mult multiplicity(Part value) const {
    auto it = parts_.find(value);
    return it == parts_.end() ? 0 : it->second;
  }

  /// Adds `count` copies of `value`; count 0 is a no-op.
  void add(Part value, Mult count = 1) {
    if (value < 1) throw PreconditionError("part values must be >= 1");
    if (count < 0) throw PreconditionError("multiplicity must be >= 0");
    if (count == 0) return;
    parts_[value] += count;
  }

  /// Removes `count` copies of `value`; throws if fewer are present.
  void remove(Part value, Mult count = 1) {
    if (count < 0) throw PreconditionError("multiplicity must be >= 0");
    if (count == 0) return;
    auto it = parts_.find(value);
    if (it == parts_.end() || it->second < count) {
      throw PreconditionError("cannot remove " + std::to_string(count) + " copies of part " +
                              std::to_string(value));
    }
    it->second -= count;
    if (it->second == 0) parts_.erase(it);
  }

  /// Removes every copy of `value` and returns how many there were.
  Mult remove_all(Part value) {
    auto it = parts_.find(value);
    if (it == parts_.end()) return 0;
    const Mult count = it->second;
    parts_.erase(it);
    return count;
  }

  std::uint64_t weight() const noexcept {
    std::uint64_t total = 0;
    for (const auto& [value, count] : parts_) {
      total += static_cast<std::uint64_t>(value) * static_cast<std::uint64_t>(count);
    }
    return total;
  }

  std::uint64_t length() const noexcept {
    std::uint64_t total = 0;
    for (const auto& [value, count] : parts_) total += static_cast<std::uint64_t>(count);
    return total;
  }

  /// Smallest / largest part; both 0 for the empty partition.
  Part min_part() const noexcept { return parts_.empty() ? 0 : parts_.begin()->first; }
  Part max_part() const noexcept { return parts_.empty() ? 0 : parts_.rbegin()->first; }

  /// Text form `v^m,v^m,...` in increasing part order; "" for the empty partition.
  std::string to_string() const {
    std::string out;
    for (const auto& [value, count] : parts_) {
      if (!out.empty()) out += ',';
      out += std::to_string(value);
      out += '^';
      out += std::to_string(count);
    }
    return out;
  }

  /// Parses the text form. Entries may appear in any order, a bare `v` means
  /// `v^1`, and repeated values accumulate.
  static Partition parse(std::string_view text) {
    Partition p;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) return p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = text.find(',', pos);
      std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      const std::size_t caret = item.find('^');
      const Part value = parse_int(item.substr(0, caret), text);
      const Mult count = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1), text);
      if (value < 1 || count < 1) {
        throw PreconditionError("partition entries need value >= 1 and multiplicity >= 1: '" +
                                std::string(text) + "'");
      }
      p.add(value, count);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return p;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  /// Arbitrary strict order for use in ordered containers. Not the canonical
  /// enumeration order; see canonical_before().
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  static std::int64_t parse_int(std::string_view digits, std::string_view whole) {
    std::int64_t v = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (digits.empty() || ec != std::errc() || ptr != last) {
      throw PreconditionError("malformed partition text: '" + std::string(whole) + "'");
    }
    return v;
  }

  Map parts_;
};

inline std::uint64_t weight(const Partition& p) noexcept { return p.weight(); }

/// Canonical enumeration order: descending lexicographic comparison of the
/// weakly decreasing part sequences. Returns true iff `a` comes strictly first.
inline bool canonical_before(const Partition& a, const Partition& b) {
  auto ia = a.parts().rbegin();
  auto ib = b.parts().rbegin();
  Partition::Mult left_a = ia == a.parts().rend() ? 0 : ia->second;
  Partition::Mult left_b = ib == b.parts().rend() ? 0 : ib->second;
  while (ia != a.parts().rend() && ib != b.parts().rend()) {
    if (ia->first != ib->first) return ia->first > ib->first;
    const Partition::Mult step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++ia != a.parts().rend()) left_a = ia->second;
    if (left_b == 0 && ++ib != b.parts().rend()) left_b = ib->second;
  }
  // A proper prefix sorts after its extensions: the longer sequence is larger.
  return ib == b.parts().rend() && ia != a.parts().rend();
}

/// Every part lies in [s+1, s+L]. k plays no role.
inline bool is_member_C(const Partition& p, const GapParams& params) {
  return p.empty() || (p.min_part() >= params.c_low() && p.max_part() <= params.high());
}

/// Nonempty, smallest part exactly s, largest part <= s+L, no part equal to k.
inline bool is_member_F(const Partition& p, const GapParams& params) {
  return !p.empty() && p.min_part() == params.s() && p.max_part() <= params.high() &&
         p.multiplicity(params.k()) == 0;
}

}  // namespace gapart
