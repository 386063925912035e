// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "hcbmeas/pauli/pauli_sum.hpp"

namespace hcbmeas::pauli {

/// Placement of spin-orbitals on qubits.
enum class QubitOrdering {
  interleaved,  // qubit 2k + s
  reordered,    // qubit k + s N
};

std::string to_string(QubitOrdering ordering);
QubitOrdering parse_ordering(std::string_view text);

/// Qubit index of spatial orbital `orbital` with spin `spin` (0 up, 1 down).
int spin_orbital(int orbital, int spin, int n_orb, QubitOrdering ordering);

/// A single creation (dagger) or annihilation operator on a qubit mode.
struct Ladder {
  int mode = 0;
  bool dagger = false;
};

/// coefficient * ops[0] ops[1] ... (leftmost acts last).
struct FermionTerm {
  std::complex<double> coefficient{1.0, 0.0};
  std::vector<Ladder> ops;
};

using FermionOperator = std::vector<FermionTerm>;

FermionTerm hermitian_conjugate(const FermionTerm& term);
/// term + term^dagger
FermionOperator plus_hc(const FermionTerm& term);

/// Jordan-Wigner image of one ladder operator:
/// a_j = Z_0..Z_{j-1} (X_j + iY_j)/2, a+_j = Z_0..Z_{j-1} (X_j - iY_j)/2.
ComplexPauliSum jw_ladder(const Ladder& op, int n_qubits);

ComplexPauliSum jw_encode(const FermionTerm& term, int n_qubits);
ComplexPauliSum jw_encode(const FermionOperator& op, int n_qubits);

/// Image of a Hermitian operator; throws if coefficients are not real.
PauliSum jw_encode_hermitian(const FermionOperator& op, int n_qubits);

}  // namespace hcbmeas::pauli
