// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hcbmeas/chem/integral_tensors.hpp"
#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/grouping/commuting_group.hpp"
#include "hcbmeas/grouping/shots.hpp"
#include "hcbmeas/hcb/decomposition.hpp"
#include "hcbmeas/sim/statevector.hpp"

namespace hcbmeas::hcb {

struct ProtocolRecord {
  int step = 0;  // 1-based
  chem::OrbitalRotation rotation;
  std::array<grouping::CommutingGroup, 3> groups;
  std::array<double, 3> contributions{};
  double step_contribution = 0.0;
  double residual_expectation = 0.0;
  double cumulative = 0.0;
  double exact = 0.0;
  /// U_R |psi>, the state the three groups are measured on.
  sim::Statevector measured_state;
};

struct ProtocolOptions {
  pauli::QubitOrdering ordering = pauli::QubitOrdering::interleaved;
  int max_steps = -1;  // negative: use every rotation
  double prune_threshold = pauli::kDefaultPrune;
  /// Tolerance of the cumulative + residual = exact check.
  double identity_tolerance = 1e-8;
};

/**
 * Iterative HCB measurement. Step k rotates the running residual (kept in
 * the reference basis) by R_k, extracts its HCB part, measures the three
 * groups on U_{R_k}|psi>, and rotates the new residual back with R_k^T.
 */
std::vector<ProtocolRecord> run_protocol(
    const chem::IntegralTensors& tensors,
    const std::vector<chem::OrbitalRotation>& rotations,
    const sim::Statevector& state, const ProtocolOptions& options = {});

struct ErrorPoint {
  int step = 0;
  double error = 0.0;
};

/// (0, |exact|) followed by (k, |cumulative_k - exact|).
std::vector<ErrorPoint> protocol_error_curve(
    const std::vector<ProtocolRecord>& records, double exact);

/// step,rotation,group1,group2,group3,cumulative,residual_expectation,abs_error
std::string protocol_csv(const std::vector<ProtocolRecord>& records);

/// Non-empty groups of every step, in step order.
grouping::GroupingResult protocol_grouping(
    const std::vector<ProtocolRecord>& records);

/// Which state the <P_i> of the shot formula are taken on.
enum class ShotFrame {
  target,    // the unrotated target state for every group
  measured,  // U_{R_k}|psi> for the groups of step k
};

std::string to_string(ShotFrame frame);
ShotFrame parse_shot_frame(std::string_view text);

grouping::ShotEstimate protocol_shots(const std::vector<ProtocolRecord>& records,
                                      const sim::Statevector& target,
                                      double epsilon,
                                      ShotFrame frame = ShotFrame::target);

}  // namespace hcbmeas::hcb
