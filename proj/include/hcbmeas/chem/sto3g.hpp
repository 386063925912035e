// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hcbmeas/chem/geometry.hpp"
#include "hcbmeas/chem/integral_tensors.hpp"

namespace hcbmeas::chem {

inline constexpr double kBohrAngstrom = 0.52917721092;

enum class OrbitalMode { lowdin, hartree_fock };

/// Raw atomic-orbital integrals in bohr/Hartree units.
struct AtomicIntegrals {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd core;         // kinetic + nuclear attraction
  std::vector<double> eri;      // chemist (pq|rs), s fastest
  double e_nuc = 0.0;
};

/// Boys function of order zero.
double boys_f0(double t);

/// STO-3G integrals for an all-hydrogen geometry. Throws for other elements.
AtomicIntegrals hydrogen_sto3g(const Geometry& geometry);

/// Lowdin S^{-1/2}. Throws if the smallest overlap eigenvalue is below 1e-8.
Eigen::MatrixXd lowdin_orthogonalizer(const Eigen::MatrixXd& overlap);

/// Restricted Hartree-Fock canonical orbitals (columns) in the AO basis.
Eigen::MatrixXd rhf_orbitals(const AtomicIntegrals& ao, int n_elec);

/// Transforms AO integrals with coefficient matrix C (AO x MO).
IntegralTensors transform_atomic(const AtomicIntegrals& ao,
                                 const Eigen::MatrixXd& coefficients,
                                 int n_elec, std::string basis_tag);

/// STO-3G integrals in symmetrically orthogonalized atomic orbitals (default)
/// or in canonical RHF orbitals.
IntegralTensors compute_minimal_basis_integrals(
    const Geometry& geometry, OrbitalMode mode = OrbitalMode::lowdin);

}  // namespace hcbmeas::chem
