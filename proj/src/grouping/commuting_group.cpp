// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/grouping/commuting_group.hpp"

#include <stdexcept>

namespace hcbmeas::grouping {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::diagonal_Z: return "diagonal_Z";
    case GroupKind::YX_XY: return "YX_XY";
    case GroupKind::YY_XX: return "YY_XX";
    case GroupKind::general: return "general";
  }
  return "general";
}

int CommutingGroup::n_qubits() const {
  return members.empty() ? 0 : members.front().first.n_qubits;
}

pauli::PauliSum CommutingGroup::to_sum() const {
  pauli::PauliSum s(n_qubits());
  for (const auto& [p, c] : members) s.add(p, c);
  return s;
}

bool internally_commuting(const CommutingGroup& group, pauli::Commutation mode) {
  for (std::size_t i = 0; i < group.members.size(); ++i)
    for (std::size_t j = i + 1; j < group.members.size(); ++j)
      if (!pauli::commutes(group.members[i].first, group.members[j].first, mode))
        return false;
  return true;
}

GroupKind classify(const CommutingGroup& group) {
  for (const auto& [p, c] : group.members)
    if (!p.is_diagonal()) return GroupKind::general;
  return GroupKind::diagonal_Z;
}

std::size_t GroupingResult::term_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

bool is_partition(const GroupingResult& result, const pauli::PauliSum& sum) {
  if (result.term_count() != sum.size()) return false;
  pauli::PauliSum rebuilt(sum.n_qubits());
  for (const auto& g : result.groups)
    for (const auto& [p, c] : g.members) {
      if (rebuilt.coefficient(p) != 0.0) return false;
      rebuilt.add(p, c);
    }
  return rebuilt.size() == sum.size() && max_abs_diff(rebuilt, sum) == 0.0;
}

void check_grouping(const GroupingResult& result) {
  for (std::size_t i = 0; i < result.groups.size(); ++i)
    if (!internally_commuting(result.groups[i], result.mode))
      throw std::logic_error("group " + std::to_string(i) + " of " +
                             result.method + " is not " +
                             pauli::to_string(result.mode) + " commuting");
}

}  // namespace hcbmeas::grouping
