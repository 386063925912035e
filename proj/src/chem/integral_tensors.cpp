// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/chem/integral_tensors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hcbmeas::chem {

IntegralTensors::IntegralTensors(int n, std::string basis_tag)
    : n_orb(n),
      h(Eigen::MatrixXd::Zero(n, n)),
      g(static_cast<std::size_t>(n) * n * n * n, 0.0),
      basis(std::move(basis_tag)) {
  if (n < 1) throw std::invalid_argument("need at least one orbital");
}

const std::array<std::array<int, 4>, 8>& g_symmetry_permutations() {
  static const std::array<std::array<int, 4>, 8> perms{{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
      {2, 1, 0, 3},
      {0, 3, 2, 1},
      {1, 2, 3, 0},
      {3, 0, 1, 2},
  }};
  return perms;
}

double symmetry_violation(const IntegralTensors& t) {
  const int N = t.n_orb;
  double worst = (t.h - t.h.transpose()).cwiseAbs().maxCoeff();
  std::array<int, 4> idx{};
  for (idx[0] = 0; idx[0] < N; ++idx[0])
    for (idx[1] = 0; idx[1] < N; ++idx[1])
      for (idx[2] = 0; idx[2] < N; ++idx[2])
        for (idx[3] = 0; idx[3] < N; ++idx[3]) {
          const double ref = t.g_at(idx[0], idx[1], idx[2], idx[3]);
          for (const auto& p : g_symmetry_permutations()) {
            const double other =
                t.g_at(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]]);
            worst = std::max(worst, std::abs(ref - other));
          }
        }
  return worst;
}

void check_invariants(const IntegralTensors& t, double tol) {
  const auto N = static_cast<std::size_t>(t.n_orb);
  if (t.h.rows() != t.n_orb || t.h.cols() != t.n_orb ||
      t.g.size() != N * N * N * N)
    throw std::invalid_argument("integral tensor dimensions inconsistent");
  if (!t.h.allFinite() || !std::isfinite(t.e_nuc))
    throw std::invalid_argument("non-finite one-electron integral");
  for (double v : t.g)
    if (!std::isfinite(v))
      throw std::invalid_argument("non-finite two-electron integral");
  const double violation = symmetry_violation(t);
  if (violation > tol)
    throw std::invalid_argument("integral symmetry violated by " +
                                std::to_string(violation));
}

double max_abs_diff(const IntegralTensors& a, const IntegralTensors& b) {
  if (a.n_orb != b.n_orb)
    throw std::invalid_argument("orbital counts differ");
  double worst = (a.h - b.h).cwiseAbs().maxCoeff();
  for (std::size_t i = 0; i < a.g.size(); ++i)
    worst = std::max(worst, std::abs(a.g[i] - b.g[i]));
  return std::max(worst, std::abs(a.e_nuc - b.e_nuc));
}

IntegralTensors permute_orbitals(const IntegralTensors& t,
                                 const std::vector<int>& perm) {
  const int N = t.n_orb;
  if (static_cast<int>(perm.size()) != N)
    throw std::invalid_argument("permutation size mismatch");
  IntegralTensors out = t;
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) out.h(k, l) = t.h(perm[k], perm[l]);
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
          out.g_at(k, l, m, n) = t.g_at(perm[k], perm[l], perm[m], perm[n]);
  return out;
}

std::vector<double> chemist_to_internal(const std::vector<double>& eri,
                                        int n) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<double> out(N * N * N * N);
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q)
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t s = 0; s < N; ++s)
          // (pq|rs) = g_{p r q s}
          out[((p * N + r) * N + q) * N + s] = eri[((p * N + q) * N + r) * N + s];
  return out;
}

}  // namespace hcbmeas::chem
