// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "hcbmeas/pauli/pauli_sum.hpp"

namespace hcbmeas::sim {

using complex = std::complex<double>;

inline constexpr int kMaxStatevectorQubits = 16;

/// Dense amplitudes over n qubits; qubit i is bit i of the basis index and
/// bit value 1 means the spin-orbital is occupied.
class Statevector {
 public:
  Statevector() = default;
  /// |0...0>
  explicit Statevector(int n_qubits);
  static Statevector basis(int n_qubits, std::uint64_t bits);
  /// Takes ownership of `amps`; throws unless the norm is 1 within 1e-10.
  static Statevector from_amplitudes(int n_qubits, Eigen::VectorXcd amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& mutable_amplitudes() { return amps_; }
  complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amps_.norm(); }
  void normalize();

 private:
  int n_qubits_ = 0;
  Eigen::VectorXcd amps_;
};

complex inner(const Statevector& a, const Statevector& b);

/// P|psi>.
Statevector apply_pauli(const pauli::PauliString& p, const Statevector& psi);

complex pauli_expectation_complex(const pauli::PauliString& p,
                                  const Statevector& psi);
/// <psi|P|psi>; asserts the imaginary part is below 1e-10.
double pauli_expectation(const pauli::PauliString& p, const Statevector& psi);

/// Exact <psi|op|psi>; throws if the imaginary part exceeds 1e-10.
double expectation(const pauli::PauliSum& op, const Statevector& psi);

/// Expected Hamming weight, i.e. the particle number.
double number_expectation(const Statevector& psi);

/// Largest probability outside the given Hamming-weight sector.
double leakage_outside_sector(const Statevector& psi, int weight);

}  // namespace hcbmeas::sim
