// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hcbmeas/grouping/commuting_group.hpp"
#include "hcbmeas/sim/statevector.hpp"

namespace hcbmeas::grouping {

inline constexpr double kDefaultEpsilon = 1e-3;

struct ShotEstimate {
  std::vector<double> per_group;
  double total = 0.0;
  double epsilon = kDefaultEpsilon;
};

/// (|w| sqrt(1 - <P>^2) / epsilon)^2; zero for the identity.
double term_shots(const pauli::PauliString& p, double weight, double expval,
                  double epsilon);

/// Largest member estimate of one group on `state`.
double group_shots(const CommutingGroup& group, const sim::Statevector& state,
                   double epsilon);

ShotEstimate estimate_shots(const std::vector<CommutingGroup>& groups,
                            const sim::Statevector& state, double epsilon);
ShotEstimate estimate_shots(const GroupingResult& grouping,
                            const sim::Statevector& state, double epsilon);

/// Per-group states, e.g. the rotated frames of a measurement protocol.
ShotEstimate estimate_shots(const std::vector<CommutingGroup>& groups,
                            const std::vector<const sim::Statevector*>& states,
                            double epsilon);

}  // namespace hcbmeas::grouping
