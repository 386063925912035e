// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hcbmeas/chem/integral_tensors.hpp"
#include "hcbmeas/pauli/jordan_wigner.hpp"
#include "hcbmeas/sim/statevector.hpp"

namespace hcbmeas::sim {

/// Spin-summed reduced density matrices
///   d1_kl   = sum_s   <a+_ks a_ls>
///   d2_klmn = sum_st  <a+_ks a+_lt a_nt a_ms>
/// with d2 laid out like IntegralTensors::g.
struct SpinSummedRdm {
  int n_orb = 0;
  Eigen::MatrixXd d1;
  std::vector<double> d2;
  double norm2 = 0.0;  // <psi|psi>, the weight of the identity
};

SpinSummedRdm compute_rdm(const Statevector& psi, int n_orb,
                          pauli::QubitOrdering ordering);

/// <H(T)> = e_nuc <1> + sum h d1 + 1/2 sum g d2.
double energy_from_rdm(const chem::IntegralTensors& t, const SpinSummedRdm& r);

/// Convenience: <psi|H(T)|psi> through the RDM route.
double tensor_expectation(const chem::IntegralTensors& t, const Statevector& psi,
                          pauli::QubitOrdering ordering);

}  // namespace hcbmeas::sim
