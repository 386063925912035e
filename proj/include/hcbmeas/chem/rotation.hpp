// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcbmeas/chem/integral_tensors.hpp"

namespace hcbmeas::chem {

struct GivensFactor {
  int p = 0;
  int q = 0;
  double theta = 0.0;
};

/**
 * Real orthogonal N x N orbital transform.
 *
 * When `factors` is nonempty, matrix == givens(f_0) * givens(f_1) * ... The
 * rows of `matrix` express the new orbitals in terms of the old ones.
 */
struct OrbitalRotation {
  Eigen::MatrixXd matrix;
  std::vector<GivensFactor> factors;
  std::string label;

  int n_orb() const { return static_cast<int>(matrix.rows()); }
  OrbitalRotation transpose() const;
};

/// A matching on spatial orbitals.
struct PairingGraph {
  std::vector<std::pair<int, int>> edges;

  /// "0-1,2-3". Empty string is the empty graph.
  static PairingGraph parse(std::string_view text);
  std::string to_string() const;
};

/// Throws std::invalid_argument if edges share a vertex, contain a self
/// loop or reference an index >= n_orb.
void validate(const PairingGraph& graph, int n_orb);

OrbitalRotation identity_rotation(int n_orb);

/// Identity except the (p, q) block [[c, s], [-s, c]] with c = cos(theta/2),
/// s = sin(theta/2).
OrbitalRotation givens(int p, int q, double theta, int n_orb);

/// Product of one Givens factor per edge.
OrbitalRotation graph_rotation(const PairingGraph& graph, double theta,
                               int n_orb);

/// Haar-like orthogonal matrix: QR of a seeded standard-normal matrix with
/// the R diagonal made positive. Factors are left empty.
OrbitalRotation random_orthogonal(std::uint64_t seed, int n_orb);

/// Factorization matrix == givens(f_0) * ... * givens(f_k) * diag(signs).
struct GivensDecomposition {
  std::vector<GivensFactor> factors;
  std::vector<int> signs;  // +1 or -1 per orbital
};
GivensDecomposition decompose_givens(const Eigen::MatrixXd& matrix);

/// Largest deviation of R R^T from the identity.
double orthogonality_error(const Eigen::MatrixXd& matrix);

/// h' = R h R^T, g'_klmn = sum R_kw R_lx R_my R_nz g_wxyz; e_nuc unchanged.
IntegralTensors rotate_integrals(const IntegralTensors& t,
                                 const Eigen::MatrixXd& rotation);
IntegralTensors rotate_integrals(const IntegralTensors& t,
                                 const OrbitalRotation& rotation);

}  // namespace hcbmeas::chem
