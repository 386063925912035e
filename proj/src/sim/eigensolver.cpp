// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/sim/eigensolver.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hcbmeas::sim {

NumberSector::NumberSector(int nq, int np) : n_qubits(nq), n_particles(np) {
  if (nq < 1 || nq > kMaxStatevectorQubits)
    throw std::invalid_argument("sector qubit count out of range");
  if (np < 0 || np > nq) throw std::invalid_argument("bad particle number");
  const std::uint64_t dim = 1ULL << nq;
  position.assign(dim, -1);
  for (std::uint64_t b = 0; b < dim; ++b)
    if (std::popcount(b) == np) {
      position[b] = static_cast<std::int32_t>(states.size());
      states.push_back(b);
    }
}

Eigen::SparseMatrix<double> sector_matrix(const pauli::PauliSum& op,
                                          const NumberSector& sector) {
  if (op.n_qubits() != sector.n_qubits)
    throw std::invalid_argument("operator and sector widths differ");
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, complex>>> by_x;
  for (const auto& [p, c] : op)
    by_x[p.x].emplace_back(p.z, c * pauli::i_power(std::popcount(p.x & p.z)));

  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t col = 0; col < sector.dim(); ++col) {
    const std::uint64_t b = sector.states[col];
    for (const auto& [x, zs] : by_x) {
      const std::int32_t row = sector.position[b ^ x];
      if (row < 0) continue;
      complex v = 0.0;
      for (const auto& [z, w] : zs) v += (std::popcount(b & z) & 1) ? -w : w;
      if (std::abs(v.imag()) > 1e-10)
        throw std::logic_error("operator is not real in the number sector");
      if (v.real() != 0.0)
        triplets.emplace_back(row, static_cast<int>(col), v.real());
    }
  }
  const auto n = static_cast<Eigen::Index>(sector.dim());
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

std::pair<double, Eigen::VectorXd> lanczos_lowest(
    const Eigen::SparseMatrix<double>& a, const EigenOptions& options,
    int* iterations) {
  const Eigen::Index n = a.rows();
  const int m = static_cast<int>(std::min<Eigen::Index>(options.krylov_dim, n));
  // Fixed-seed random start: generic overlap with every symmetry sector.
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
  v.normalize();

  double best_res = std::numeric_limits<double>::infinity();
  double energy = 0.0;
  int total = 0;
  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    Eigen::MatrixXd basis(n, m);
    Eigen::VectorXd alpha(m), beta(m);
    basis.col(0) = v;
    int k = 0;
    for (; k < m; ++k) {
      Eigen::VectorXd w = a * basis.col(k);
      ++total;
      alpha[k] = basis.col(k).dot(w);
      // Full reorthogonalization, applied twice for stability.
      for (int pass = 0; pass < 2; ++pass)
        w -= basis.leftCols(k + 1) * (basis.leftCols(k + 1).transpose() * w);
      beta[k] = w.norm();
      if (k + 1 == m || beta[k] < 1e-14) {
        ++k;
        break;
      }
      basis.col(k + 1) = w / beta[k];
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    energy = es.eigenvalues()[0];
    v = basis.leftCols(k) * es.eigenvectors().col(0);
    v.normalize();
    const double res = (a * v - energy * v).norm();
    best_res = std::min(best_res, res);
    if (res < options.tolerance || (k < m && res < options.required)) {
      if (iterations) *iterations = total;
      return {energy, v};
    }
  }
  if (best_res < options.required) {
    if (iterations) *iterations = total;
    return {energy, v};
  }
  std::ostringstream msg;
  msg << "Lanczos did not converge; best residual " << best_res;
  throw std::runtime_error(msg.str());
}

GroundState ground_state(const pauli::PauliSum& op, int n_electrons,
                         const EigenOptions& options) {
  const NumberSector sector(op.n_qubits(), n_electrons);
  const auto m = sector_matrix(op, sector);
  GroundState gs;
  Eigen::VectorXd vec;
  if (sector.dim() <= options.dense_limit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(m)};
    gs.energy = es.eigenvalues()[0];
    vec = es.eigenvectors().col(0);
    gs.method = "dense";
  } else {
    auto [e, v] = lanczos_lowest(m, options, &gs.iterations);
    gs.energy = e;
    vec = std::move(v);
    gs.method = "lanczos";
  }
  Eigen::Index arg = 0;
  vec.cwiseAbs().maxCoeff(&arg);
  if (vec[arg] < 0) vec = -vec;
  vec.normalize();
  gs.residual = (m * vec - gs.energy * vec).norm();
  if (gs.residual >= options.required) {
    std::ostringstream msg;
    msg << "ground state residual " << gs.residual << " above "
        << options.required;
    throw std::runtime_error(msg.str());
  }
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(Eigen::Index{1} << op.n_qubits());
  for (std::size_t i = 0; i < sector.dim(); ++i)
    full[static_cast<Eigen::Index>(sector.states[i])] = vec[static_cast<Eigen::Index>(i)];
  gs.state = Statevector::from_amplitudes(op.n_qubits(), std::move(full));
  return gs;
}

}  // namespace hcbmeas::sim
