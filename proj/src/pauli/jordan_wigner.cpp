// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/pauli/jordan_wigner.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcbmeas::pauli {

std::string to_string(QubitOrdering ordering) {
  return ordering == QubitOrdering::interleaved ? "interleaved" : "reordered";
}

QubitOrdering parse_ordering(std::string_view text) {
  if (text == "interleaved") return QubitOrdering::interleaved;
  if (text == "reordered") return QubitOrdering::reordered;
  throw std::invalid_argument("unknown qubit ordering '" + std::string(text) +
                              "'");
}

int spin_orbital(int orbital, int spin, int n_orb, QubitOrdering ordering) {
  if (orbital < 0 || orbital >= n_orb || (spin != 0 && spin != 1))
    throw std::out_of_range("spin-orbital index out of range");
  return ordering == QubitOrdering::interleaved ? 2 * orbital + spin
                                                : orbital + spin * n_orb;
}

FermionTerm hermitian_conjugate(const FermionTerm& term) {
  FermionTerm out{std::conj(term.coefficient), {}};
  out.ops.assign(term.ops.rbegin(), term.ops.rend());
  for (auto& op : out.ops) op.dagger = !op.dagger;
  return out;
}

FermionOperator plus_hc(const FermionTerm& term) {
  return {term, hermitian_conjugate(term)};
}

ComplexPauliSum jw_ladder(const Ladder& op, int n_qubits) {
  if (op.mode < 0 || op.mode >= n_qubits)
    throw std::out_of_range("ladder mode " + std::to_string(op.mode) +
                            " outside " + std::to_string(n_qubits) + " qubits");
  const std::uint64_t bit = 1ULL << op.mode;
  const std::uint64_t string = bit - 1;
  ComplexPauliSum out(n_qubits);
  out.add(PauliString(n_qubits, bit, string), 0.5);
  out.add(PauliString(n_qubits, bit, string | bit),
          std::complex<double>(0.0, op.dagger ? -0.5 : 0.5));
  return out;
}

ComplexPauliSum jw_encode(const FermionTerm& term, int n_qubits) {
  ComplexPauliSum acc(n_qubits);
  acc.add(PauliString::identity(n_qubits), term.coefficient);
  for (const auto& op : term.ops) acc = acc * jw_ladder(op, n_qubits);
  return acc;
}

ComplexPauliSum jw_encode(const FermionOperator& op, int n_qubits) {
  ComplexPauliSum out(n_qubits);
  for (const auto& term : op) out.add(jw_encode(term, n_qubits));
  return out;
}

PauliSum jw_encode_hermitian(const FermionOperator& op, int n_qubits) {
  return jw_encode(op, n_qubits).to_real();
}

}  // namespace hcbmeas::pauli
