// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "hcbmeas/grouping/commuting_group.hpp"
#include "hcbmeas/grouping/shots.hpp"
#include "json.hpp"

namespace hcbmeas::grouping {

/// {"method", "mode", "groups": [{"kind", "terms": [{"pauli", "coefficient"}]}]}
nlohmann::json to_json(const GroupingResult& result);
nlohmann::json to_json(const CommutingGroup& group);
GroupingResult grouping_from_json(const nlohmann::json& j, int n_qubits);

/// "group,shots" rows followed by a "total" row.
std::string shots_csv(const ShotEstimate& estimate);

}  // namespace hcbmeas::grouping
