// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/pauli/jordan_wigner.hpp"
#include "hcbmeas/sim/statevector.hpp"

namespace hcbmeas::sim {

enum class GateKind { X, Z, H, S, Sdg, Rz, Rx, CNOT, CZ, UR, UC };

/**
 * One gate. Qubit gates use `a` (and `b` for the target of CNOT/CZ).
 *
 * UR and UC act on spatial orbitals p = a, q = b:
 *   UR(p,q,t) = exp(t/2 sum_s (a+_ps a_qs - a+_qs a_ps))
 *   UC(p,q,f) = exp(f/2 (A - A+)),  A = a+_pu a+_pd a_qd a_qu
 * Rz(t) = exp(-i t Z/2), Rx(t) = exp(-i t X/2).
 */
struct Gate {
  GateKind kind = GateKind::X;
  int a = 0;
  int b = -1;
  double angle = 0.0;
};

std::string to_string(GateKind kind);
bool is_two_qubit(GateKind kind);
bool is_clifford(GateKind kind);

class Circuit {
 public:
  Circuit() = default;
  Circuit(int n_qubits, pauli::QubitOrdering ordering);

  int n_qubits() const { return n_qubits_; }
  int n_orb() const { return n_qubits_ / 2; }
  pauli::QubitOrdering ordering() const { return ordering_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates indices and appends.
  Circuit& add(const Gate& gate);
  Circuit& append(const Circuit& other);

  Circuit& x(int q) { return add({GateKind::X, q}); }
  Circuit& z(int q) { return add({GateKind::Z, q}); }
  Circuit& h(int q) { return add({GateKind::H, q}); }
  Circuit& s(int q) { return add({GateKind::S, q}); }
  Circuit& sdg(int q) { return add({GateKind::Sdg, q}); }
  Circuit& rz(int q, double t) { return add({GateKind::Rz, q, -1, t}); }
  Circuit& rx(int q, double t) { return add({GateKind::Rx, q, -1, t}); }
  Circuit& cnot(int c, int t) { return add({GateKind::CNOT, c, t}); }
  Circuit& cz(int a, int b) { return add({GateKind::CZ, a, b}); }
  Circuit& ur(int p, int q, double t) { return add({GateKind::UR, p, q, t}); }
  Circuit& uc(int p, int q, double f) { return add({GateKind::UC, p, q, f}); }

  /// Reverses the gate order and inverts every gate.
  Circuit inverse() const;

  /// "UR p q theta", "UC p q phi", "X i", "CNOT c t", "RZ i theta", ...
  std::string to_text() const;
  static Circuit parse(std::string_view text, int n_qubits,
                       pauli::QubitOrdering ordering);

 private:
  int n_qubits_ = 0;
  pauli::QubitOrdering ordering_ = pauli::QubitOrdering::interleaved;
  std::vector<Gate> gates_;
};

void apply_gate(const Gate& gate, const Circuit& context, Statevector& psi);
void apply_in_place(const Circuit& circuit, Statevector& psi);
Statevector apply(const Circuit& circuit, const Statevector& psi);

/// Circuit U_R realising R on the qubit register, so that
/// H(rotate_integrals(T, R)) = U_R H(T) U_R^dagger. Matrices without factors
/// are decomposed into Givens factors and orbital sign flips first.
Circuit rotation_circuit(const chem::OrbitalRotation& rotation,
                         pauli::QubitOrdering ordering);

/// Hartree-Fock-like determinant with spatial orbitals 0..n_elec/2-1 doubly
/// occupied.
std::uint64_t lowest_determinant(int n_orb, int n_elec,
                                 pauli::QubitOrdering ordering);

}  // namespace hcbmeas::sim
