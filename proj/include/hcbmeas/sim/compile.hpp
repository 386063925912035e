// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hcbmeas/pauli/pauli_string.hpp"
#include "hcbmeas/sim/circuit.hpp"

namespace hcbmeas::sim {

/// Appends exp(-i beta P): basis change, CNOT ladder over the support, Rz on
/// the last support qubit, then the mirror image.
void append_pauli_rotation(Circuit& circuit, const pauli::PauliString& p,
                           double beta);

/// Anti-Hermitian generator of an orbital gate as sum_j i a_j P_j with real
/// a_j. The strings pairwise commute.
std::vector<std::pair<pauli::PauliString, double>> orbital_gate_generator(
    const Gate& gate, int n_orb, pauli::QubitOrdering ordering);

/// Rewrites UR and UC into {H, S, Sdg, CNOT, Rz}; other gates pass through.
Circuit compile_elementary(const Circuit& circuit);

}  // namespace hcbmeas::sim
