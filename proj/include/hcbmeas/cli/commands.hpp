// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hcbmeas/cli/config.hpp"
#include "json.hpp"

namespace hcbmeas::cli {

// Each command writes its files under config.output and returns a summary
// that the executable prints as JSON.

/// integrals.fcidump and integrals.json.
nlohmann::json cmd_integrals(const ExperimentConfig& config);
/// eigen.json: ground energy in the electron-number sector.
nlohmann::json cmd_eigen(const ExperimentConfig& config);
/// protocol.csv, error_curve.csv, protocol.json; batch.csv in sweep mode.
nlohmann::json cmd_decompose(const ExperimentConfig& config);
/// groups.csv and groupings.json.
nlohmann::json cmd_groups(const ExperimentConfig& config);
/// shots.csv.
nlohmann::json cmd_shots(const ExperimentConfig& config);
/// sample_si.csv, sample_protocol.csv, sample_summary.json.
nlohmann::json cmd_sample(const ExperimentConfig& config);
/// depth.csv.
nlohmann::json cmd_depth(const ExperimentConfig& config);

}  // namespace hcbmeas::cli
