// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcbmeas/grouping/commuting_group.hpp"
#include "hcbmeas/sim/circuit.hpp"
#include "hcbmeas/sim/statevector.hpp"

namespace hcbmeas::sim {

struct GroupSample {
  std::vector<double> member_estimates;  // one per member, in order
  double energy = 0.0;                   // sum of coefficient * estimate
};

/// Derives an independent seed from a base seed and a job index.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/**
 * Measurement of one commuting group in its diagonal frame.
 *
 * Prepared once per (state, group); draws are then cheap. Every member is
 * evaluated on the same shots, so correlations inside the group are kept.
 */
class GroupSampler {
 public:
  /// Throws std::invalid_argument if `diag` does not diagonalize the group.
  GroupSampler(const Statevector& state, const grouping::CommutingGroup& group,
               const Circuit& diag);

  GroupSample sample(std::size_t shots, std::uint64_t seed) const;
  /// Noiseless values of the same estimators.
  GroupSample exact() const;

 private:
  std::vector<double> probabilities_;
  mutable std::discrete_distribution<std::uint64_t> distribution_;
  std::vector<double> coefficients_;
  std::vector<std::uint64_t> z_masks_;
  std::vector<int> signs_;
  GroupSample evaluate(const std::vector<std::pair<std::uint64_t, double>>&
                           weighted_outcomes) const;
};

GroupSample sample_group(const Statevector& state,
                         const grouping::CommutingGroup& group,
                         const Circuit& diag, std::size_t shots,
                         std::uint64_t seed);

/// One group measured on one state with a fixed shot budget.
struct MeasurementJob {
  const grouping::CommutingGroup* group = nullptr;
  const Statevector* state = nullptr;
  std::size_t shots = 1;
};

struct ExperimentResult {
  double reference = 0.0;       // noiseless estimate of the measured operator
  std::vector<double> errors;   // estimate - reference, per repetition
  double mean_error = 0.0;
  double stddev = 0.0;
  double mean_abs_error = 0.0;
  double abs_mean_error = 0.0;  // |mean of the estimates - reference|
  std::size_t shots_per_repetition = 0;
};

/// Repeats the full measurement `repetitions` times. A zero-shot job is
/// evaluated exactly.
ExperimentResult finite_sample_experiment(const std::vector<MeasurementJob>& jobs,
                                          int repetitions, std::uint64_t seed);

/// Shots per group from an estimate: max(1, ceil(M_group)).
std::size_t shots_from_estimate(double m_group);

/// "repetition,error" rows.
std::string experiment_csv(const ExperimentResult& result);

}  // namespace hcbmeas::sim
