// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcbmeas/pauli/pauli_sum.hpp"
#include "hcbmeas/sim/circuit.hpp"

namespace hcbmeas::grouping {

enum class GroupKind { diagonal_Z, YX_XY, YY_XX, general };

std::string to_string(GroupKind kind);

struct CommutingGroup {
  std::vector<std::pair<pauli::PauliString, double>> members;
  GroupKind kind = GroupKind::general;
  std::optional<sim::Circuit> diagonalizer;

  std::size_t size() const { return members.size(); }
  int n_qubits() const;
  pauli::PauliSum to_sum() const;
};

/// Every member pair commutes in `mode`.
bool internally_commuting(const CommutingGroup& group,
                          pauli::Commutation mode = pauli::Commutation::fully);

/// diagonal_Z when every member is diagonal, general otherwise.
GroupKind classify(const CommutingGroup& group);

struct GroupingResult {
  std::vector<CommutingGroup> groups;
  std::string method;
  pauli::Commutation mode = pauli::Commutation::fully;

  std::size_t size() const { return groups.size(); }
  std::size_t term_count() const;
};

/// True when the groups hold every input term exactly once with its
/// coefficient and nothing else.
bool is_partition(const GroupingResult& result, const pauli::PauliSum& sum);

/// Throws std::logic_error naming the first group that breaks its mode.
void check_grouping(const GroupingResult& result);

}  // namespace hcbmeas::grouping
