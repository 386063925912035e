// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Sparse>
#include <cstdint>
#include <string>
#include <vector>

#include "hcbmeas/pauli/pauli_sum.hpp"
#include "hcbmeas/sim/statevector.hpp"

namespace hcbmeas::sim {

/// Computational basis states of fixed Hamming weight, in increasing order.
struct NumberSector {
  int n_qubits = 0;
  int n_particles = 0;
  std::vector<std::uint64_t> states;
  std::vector<std::int32_t> position;  // basis index -> sector row, or -1

  NumberSector(int n_qubits, int n_particles);
  std::size_t dim() const { return states.size(); }
};

/// Real symmetric matrix of a number-conserving operator in the sector.
/// Throws if an entry picks up an imaginary part above 1e-10.
Eigen::SparseMatrix<double> sector_matrix(const pauli::PauliSum& op,
                                          const NumberSector& sector);

struct EigenOptions {
  std::size_t dense_limit = 4096;
  int krylov_dim = 80;
  int max_restarts = 200;
  double tolerance = 1e-10;   // target residual
  double required = 1e-8;     // residual that must be reached
};

struct GroundState {
  double energy = 0.0;
  Statevector state;
  double residual = 0.0;
  std::string method;
  int iterations = 0;
};

/// Lowest eigenpair within the n_electrons sector. The phase is fixed so the
/// largest-magnitude amplitude is real and positive.
GroundState ground_state(const pauli::PauliSum& op, int n_electrons,
                         const EigenOptions& options = {});

/// Lowest eigenpair of a symmetric matrix by restarted Lanczos with full
/// reorthogonalization. Throws std::runtime_error with the achieved residual
/// on failure.
std::pair<double, Eigen::VectorXd> lanczos_lowest(
    const Eigen::SparseMatrix<double>& a, const EigenOptions& options,
    int* iterations = nullptr);

}  // namespace hcbmeas::sim
