// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hcbmeas/chem/integral_tensors.hpp"
#include "hcbmeas/pauli/jordan_wigner.hpp"
#include "hcbmeas/pauli/pauli_sum.hpp"

namespace hcbmeas::pauli {

/// Jordan-Wigner image of the integral Hamiltonian plus e_nuc * I, pruned at
/// `threshold` (terms with |c| < threshold are dropped).
PauliSum build_qubit_hamiltonian(const chem::IntegralTensors& t,
                                 QubitOrdering ordering = QubitOrdering::interleaved,
                                 double threshold = kDefaultPrune);

/// Fermionic form of the same Hamiltonian, one term per nonzero entry and
/// spin assignment. Useful for oracles.
FermionOperator fermion_hamiltonian(const chem::IntegralTensors& t,
                                    QubitOrdering ordering);

}  // namespace hcbmeas::pauli
