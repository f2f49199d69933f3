#pragma once

#include <string>

#include "json.hpp"

#include "gapart/bigint.hpp"
#include "gapart/injections.hpp"
#include "gapart/partition.hpp"

namespace gapart {

/// {"<value>": multiplicity, ...}
inline nlohmann::json partition_to_json(const Partition& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [value, count] : p.parts()) out[std::to_string(value)] = count;
  return out;
}

inline Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PreconditionError("partition JSON must be an object");
  Partition p;
  for (const auto& [key, count] : j.items()) {
    std::size_t used = 0;
    const long long value = std::stoll(key, &used);
    if (used != key.size() || !count.is_number_integer() || count.get<long long>() < 1) {
      throw PreconditionError("malformed partition JSON entry '" + key + "'");
    }
    p.add(value, count.get<long long>());
  }
  return p;
}

/// {"class", "aux", "input", "output"}; partitions in the text format.
inline nlohmann::json trace_to_json(const InjectionTrace& trace) {
  nlohmann::json aux = nlohmann::json::object();
  for (const auto& [name, value] : trace.aux) aux[name] = value;
  return {{"class", trace.label.to_string()},
          {"aux", std::move(aux)},
          {"input", trace.input.to_string()},
          {"output", trace.output.to_string()}};
}

/// Big integers travel as decimal strings.
inline nlohmann::json big_to_json(const BigInt& v) { return to_decimal(v); }

}  // namespace gapart
