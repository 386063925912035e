// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/grouping/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace hcbmeas::grouping {

nlohmann::json to_json(const CommutingGroup& group) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : group.members)
    terms.push_back({{"pauli", p.to_string()}, {"coefficient", c}});
  nlohmann::json j{{"kind", to_string(group.kind)}, {"terms", terms}};
  if (group.diagonalizer) j["diagonalizer"] = group.diagonalizer->to_text();
  return j;
}

nlohmann::json to_json(const GroupingResult& result) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : result.groups) groups.push_back(to_json(g));
  return {{"method", result.method},
          {"mode", pauli::to_string(result.mode)},
          {"groups", groups}};
}

GroupingResult grouping_from_json(const nlohmann::json& j, int n_qubits) {
  GroupingResult r;
  r.method = j.at("method").get<std::string>();
  r.mode = pauli::parse_commutation(j.at("mode").get<std::string>());
  for (const auto& jg : j.at("groups")) {
    CommutingGroup g;
    for (const auto& t : jg.at("terms"))
      g.members.emplace_back(
          pauli::PauliString::parse(t.at("pauli").get<std::string>(), n_qubits),
          t.at("coefficient").get<double>());
    const auto kind = jg.value("kind", std::string("general"));
    if (kind == "diagonal_Z") g.kind = GroupKind::diagonal_Z;
    else if (kind == "YX_XY") g.kind = GroupKind::YX_XY;
    else if (kind == "YY_XX") g.kind = GroupKind::YY_XX;
    else g.kind = GroupKind::general;
    r.groups.push_back(std::move(g));
  }
  check_grouping(r);
  return r;
}

std::string shots_csv(const ShotEstimate& estimate) {
  std::string out = "group,shots\n";
  char buf[64];
  for (std::size_t i = 0; i < estimate.per_group.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.6e\n", i, estimate.per_group[i]);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "total,%.6e\n", estimate.total);
  out += buf;
  return out;
}

}  // namespace hcbmeas::grouping
