// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hcbmeas::chem {

/**
 * One- and two-electron integrals over N real spatial orbitals.
 *
 * The Hamiltonian they define is
 *
 *   H = e_nuc + sum_{kl,s} h_kl a+_{ks} a_{ls}
 *             + 1/2 sum_{klmn,s,t} g_klmn a+_{ks} a+_{lt} a_{nt} a_{ms}
 *
 * so g_klmn = <kl|mn> = (km|ln) in chemist notation. Storage is row-major
 * with n fastest.
 */
struct IntegralTensors {
  int n_orb = 0;
  Eigen::MatrixXd h;
  std::vector<double> g;
  double e_nuc = 0.0;
  int n_elec = 0;
  std::string basis;

  IntegralTensors() = default;
  IntegralTensors(int n, std::string basis_tag = "");

  std::size_t index(int k, int l, int m, int n) const {
    const auto N = static_cast<std::size_t>(n_orb);
    return ((static_cast<std::size_t>(k) * N + l) * N + m) * N + n;
  }
  double& g_at(int k, int l, int m, int n) { return g[index(k, l, m, n)]; }
  double g_at(int k, int l, int m, int n) const { return g[index(k, l, m, n)]; }

  /// Chemist-notation accessor (pq|rs).
  double chem(int p, int q, int r, int s) const { return g_at(p, r, q, s); }
};

/// The eight index permutations under which real-orbital g is invariant,
/// expressed on (k, l, m, n) positions.
const std::array<std::array<int, 4>, 8>& g_symmetry_permutations();

/// Largest violation of h symmetry and of the 8-fold g symmetry.
double symmetry_violation(const IntegralTensors& t);

/// Throws std::invalid_argument when h is not symmetric within `tol`, g
/// breaks the 8-fold symmetry within `tol`, or any entry is non-finite.
void check_invariants(const IntegralTensors& t, double tol = 1e-10);

/// Largest absolute entrywise difference (h, g and e_nuc).
double max_abs_diff(const IntegralTensors& a, const IntegralTensors& b);

/// Relabels orbitals: new orbital i is old orbital perm[i].
IntegralTensors permute_orbitals(const IntegralTensors& t,
                                 const std::vector<int>& perm);

/// Converts a chemist-notation tensor eri[(p,q,r,s)] = (pq|rs) (row-major,
/// s fastest) into the internal layout.
std::vector<double> chemist_to_internal(const std::vector<double>& eri, int n);

}  // namespace hcbmeas::chem
