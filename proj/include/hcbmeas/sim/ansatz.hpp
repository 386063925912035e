// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hcbmeas/chem/integral_tensors.hpp"
#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/sim/circuit.hpp"

namespace hcbmeas::sim {

/**
 * Graph-based pair ansatz.
 *
 * The first graph G_1 fixes the pairing. For each of its edges (p, q) a pair
 * is placed in p (X on both spin-orbitals) and split by UC(p, q, f_e); this
 * product of two-level pair rotations is the separable pair block. Then
 * U_R(G_1, phi_1)^dagger is applied, and every further graph adds
 * U_R(G_k, phi_k)^dagger UC(G_k) U_R(G_k, phi_k).
 *
 * Parameters: phi_1..phi_K (one rotation angle per graph) followed by one UC
 * angle per edge, graph by graph.
 */
struct PairAnsatz {
  std::vector<chem::PairingGraph> graphs;
  int n_orb = 0;
  pauli::QubitOrdering ordering = pauli::QubitOrdering::interleaved;

  std::size_t parameter_count() const;
  /// Twice the number of edges in the first graph.
  int n_electrons() const;
};

void validate(const PairAnsatz& ansatz);

Circuit build_scenario2_ansatz(const PairAnsatz& ansatz,
                               const std::vector<double>& params);

Statevector ansatz_state(const PairAnsatz& ansatz,
                         const std::vector<double>& params);

struct AnsatzOptions {
  int max_iterations = 4000;
  double size_tolerance = 1e-7;
  double initial_step = 0.4;
  /// Extra starting points are tried with rotation angles 0 and pi/2.
  bool multi_start = true;
  /// If non-empty, the only starting point (multi_start is ignored).
  std::vector<double> initial;
};

struct AnsatzFit {
  std::vector<double> params;
  double energy = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Minimises <H(T)> over the parameters with the Nelder-Mead simplex.
AnsatzFit optimize_ansatz(const chem::IntegralTensors& tensors,
                          const PairAnsatz& ansatz,
                          const AnsatzOptions& options = {});

}  // namespace hcbmeas::sim
