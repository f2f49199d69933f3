#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gapart/injections.hpp"
#include "gapart/json_io.hpp"
#include "gapart/params.hpp"
#include "gapart/partition.hpp"

namespace gapart {

/// Result of replaying one fixture case: the serialized traces must match the
/// stored ones byte for byte.
struct GoldenResult {
  std::string name;
  bool phi_match = false;
  bool psi_match = false;
  std::string phi_actual;
  std::string psi_actual;
  std::string error;

  bool ok() const { return phi_match && psi_match && error.empty(); }
};

inline nlohmann::json load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open fixture file " + path);
  return nlohmann::json::parse(in);
}

/// Each case: {name, L, s, k, input, phi: <trace>, psi: <trace>}.
inline std::vector<GoldenResult> replay_golden(const nlohmann::json& cases) {
  std::vector<GoldenResult> out;
  for (const auto& c : cases) {
    GoldenResult r;
    r.name = c.value("name", "");
    try {
      const auto params = GapParams::make(c.at("L").get<std::int64_t>(), c.at("s").get<std::int64_t>(),
                                          c.at("k").get<std::int64_t>());
      const auto alpha = Partition::parse(c.at("input").get<std::string>());
      const auto forward = phi(alpha, params);
      r.phi_actual = trace_to_json(forward).dump();
      r.phi_match = r.phi_actual == c.at("phi").dump();
      r.psi_actual = trace_to_json(psi(forward.output, params)).dump();
      r.psi_match = r.psi_actual == c.at("psi").dump();
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace gapart
