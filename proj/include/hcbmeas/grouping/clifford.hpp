// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hcbmeas/grouping/commuting_group.hpp"
#include "hcbmeas/sim/circuit.hpp"

namespace hcbmeas::grouping {

/// A Pauli string with a sign.
struct SignedPauli {
  pauli::PauliString p;
  bool negative = false;
};

/// U P U^dagger for a Clifford gate U from {X, Z, H, S, Sdg, CNOT, CZ}.
void conjugate_in_place(SignedPauli& sp, const sim::Gate& gate);
/// Conjugation by a whole circuit (gates applied in order).
SignedPauli conjugate(const pauli::PauliString& p, const sim::Circuit& circuit);

/// Clifford circuit over {H, S, CNOT, CZ} mapping every string to a signed
/// Z-type string. Throws std::invalid_argument for non-commuting input and
/// std::logic_error if the certificate fails.
sim::Circuit diagonalizer(const std::vector<pauli::PauliString>& strings);
sim::Circuit diagonalizer(const CommutingGroup& group);

/// Every member conjugates to a diagonal string.
bool certify(const CommutingGroup& group, const sim::Circuit& circuit);

/// Fills in the diagonalizer of every group.
void attach_diagonalizers(GroupingResult& result);
void attach_diagonalizers(std::vector<CommutingGroup>& groups);

}  // namespace hcbmeas::grouping
