// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/grouping/shots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hcbmeas::grouping {

double term_shots(const pauli::PauliString& p, double weight, double expval,
                  double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (p.is_identity()) return 0.0;
  const double var = std::max(0.0, 1.0 - expval * expval);
  const double m = std::abs(weight) * std::sqrt(var) / epsilon;
  return m * m;
}

double group_shots(const CommutingGroup& group, const sim::Statevector& state,
                   double epsilon) {
  double worst = 0.0;
  for (const auto& [p, c] : group.members) {
    if (p.is_identity()) continue;
    worst = std::max(worst,
                     term_shots(p, c, sim::pauli_expectation(p, state), epsilon));
  }
  return worst;
}

ShotEstimate estimate_shots(const std::vector<CommutingGroup>& groups,
                            const std::vector<const sim::Statevector*>& states,
                            double epsilon) {
  if (groups.size() != states.size())
    throw std::invalid_argument("need one state per group");
  ShotEstimate est{{}, 0.0, epsilon};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    est.per_group.push_back(group_shots(groups[i], *states[i], epsilon));
    est.total += est.per_group.back();
  }
  return est;
}

ShotEstimate estimate_shots(const std::vector<CommutingGroup>& groups,
                            const sim::Statevector& state, double epsilon) {
  return estimate_shots(
      groups, std::vector<const sim::Statevector*>(groups.size(), &state),
      epsilon);
}

ShotEstimate estimate_shots(const GroupingResult& grouping,
                            const sim::Statevector& state, double epsilon) {
  return estimate_shots(grouping.groups, state, epsilon);
}

}  // namespace hcbmeas::grouping
