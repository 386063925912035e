// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcbmeas/chem/integral_tensors.hpp"
#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/cli/config.hpp"

namespace hcbmeas::cli {

struct LoadedSystem {
  chem::IntegralTensors tensors;
  std::optional<chem::Geometry> geometry;
  std::string name;
};

LoadedSystem load_system(const SystemConfig& config);

/// Pairing graphs used when a config leaves the rotation list empty:
/// H2 {0-1}; H4 {0-1,2-3}, {0-3,1-2}, {0-2,1-3}; five matchings for H6 and
/// three for H8 picked by greedy residual minimisation on the 1.5 A chain.
std::vector<std::string> standard_graphs(int n_orb);

/// Default ansatz graphs for scenario II runs of the standard systems.
std::vector<std::string> standard_ansatz_graphs(int n_orb, chem::Shape shape);

/// Graph rotations (theta from the config), optional identity first, then
/// `random_count` seeded random orthogonal matrices.
std::vector<chem::OrbitalRotation> build_rotations(const RotationConfig& config,
                                                   int n_orb);

}  // namespace hcbmeas::cli
