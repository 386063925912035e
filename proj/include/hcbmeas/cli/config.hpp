// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcbmeas/chem/geometry.hpp"
#include "hcbmeas/chem/sto3g.hpp"
#include "hcbmeas/hcb/protocol.hpp"
#include "hcbmeas/pauli/jordan_wigner.hpp"
#include "json.hpp"

namespace hcbmeas::cli {

/// Raised for invalid configuration content.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SystemConfig {
  // Exactly one source: generated geometry, XYZ file or FCIDUMP file.
  int atoms = 4;
  double spacing = 1.5;
  chem::Shape shape = chem::Shape::line;
  std::optional<std::uint64_t> geometry_seed;
  std::string xyz;
  std::string fcidump;
  chem::OrbitalMode orbitals = chem::OrbitalMode::lowdin;
};

struct RotationConfig {
  /// Graph edge lists such as "0-1,2-3"; empty means the standard set.
  std::vector<std::string> graphs;
  double theta = 1.5707963267948966;
  bool include_identity = false;
  int random_count = 0;
  std::uint64_t random_seed = 1;
};

struct AnsatzConfig {
  std::vector<std::string> graphs;
  std::vector<double> initial;  // optional starting parameters
};

struct BatchConfig {
  int count = 0;  // > 0 enables a random-geometry sweep
  std::uint64_t first_seed = 1;
  double accept_error = 2e-3;
};

struct ExperimentConfig {
  SystemConfig system;
  pauli::QubitOrdering ordering = pauli::QubitOrdering::interleaved;
  int scenario = 1;
  RotationConfig rotations;
  std::optional<AnsatzConfig> ansatz;
  BatchConfig batch;
  double epsilon = 1e-3;
  int repetitions = 100;
  std::uint64_t seed = 20240501;
  double prune = 1e-12;
  int max_steps = -1;
  hcb::ShotFrame shot_frame = hcb::ShotFrame::target;
  bool exact_sampling = false;  // replace sampling by exact expectations
  pauli::Commutation grouping_mode = pauli::Commutation::fully;
  std::string output = "out";
};

/// Parses and validates. Unknown keys are rejected.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& config);

/// Throws ConfigError for cross-field violations (scenario/ansatz pairing,
/// orbital indices out of range once N is known).
void validate(const ExperimentConfig& config, int n_orb);

}  // namespace hcbmeas::cli
