// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/chem/rotation.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hcbmeas::chem {

OrbitalRotation OrbitalRotation::transpose() const {
  OrbitalRotation out;
  out.matrix = matrix.transpose();
  // (G_0 G_1 ... G_k)^T = G_k(-t) ... G_0(-t)
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.factors.push_back({it->p, it->q, -it->theta});
  out.label = label.empty() ? label : label + "^T";
  return out;
}

PairingGraph PairingGraph::parse(std::string_view text) {
  PairingGraph graph;
  std::string s(text);
  std::stringstream in(s);
  std::string edge;
  while (std::getline(in, edge, ',')) {
    const auto first = edge.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    edge = edge.substr(first, edge.find_last_not_of(" \t") - first + 1);
    const auto dash = edge.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("graph edge '" + edge + "' must be 'p-q'");
    try {
      std::size_t used_p = 0, used_q = 0;
      const int p = std::stoi(edge.substr(0, dash), &used_p);
      const int q = std::stoi(edge.substr(dash + 1), &used_q);
      if (used_p != dash || used_q != edge.size() - dash - 1)
        throw std::invalid_argument("trailing characters");
      graph.edges.emplace_back(p, q);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("graph edge '" + edge + "' must be 'p-q'");
    }
  }
  return graph;
}

std::string PairingGraph::to_string() const {
  std::string out;
  for (const auto& [p, q] : edges) {
    if (!out.empty()) out += ",";
    out += std::to_string(p) + "-" + std::to_string(q);
  }
  return out;
}

void validate(const PairingGraph& graph, int n_orb) {
  std::set<int> used;
  for (const auto& [p, q] : graph.edges) {
    if (p < 0 || q < 0 || p >= n_orb || q >= n_orb)
      throw std::invalid_argument("graph edge index out of range");
    if (p == q) throw std::invalid_argument("graph edge is a self loop");
    if (!used.insert(p).second || !used.insert(q).second)
      throw std::invalid_argument("graph edges overlap at an orbital");
  }
}

OrbitalRotation identity_rotation(int n_orb) {
  return {Eigen::MatrixXd::Identity(n_orb, n_orb), {}, "identity"};
}

OrbitalRotation givens(int p, int q, double theta, int n_orb) {
  if (p < 0 || q < 0 || p >= n_orb || q >= n_orb)
    throw std::invalid_argument("givens index out of range");
  if (p == q) throw std::invalid_argument("givens indices must differ");
  OrbitalRotation r{Eigen::MatrixXd::Identity(n_orb, n_orb),
                    {{p, q, theta}},
                    ""};
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  r.matrix(p, p) = c;
  r.matrix(p, q) = s;
  r.matrix(q, p) = -s;
  r.matrix(q, q) = c;
  return r;
}

OrbitalRotation graph_rotation(const PairingGraph& graph, double theta,
                               int n_orb) {
  validate(graph, n_orb);
  OrbitalRotation r = identity_rotation(n_orb);
  r.label = graph.to_string();
  for (const auto& [p, q] : graph.edges) {
    const OrbitalRotation f = givens(p, q, theta, n_orb);
    r.matrix = r.matrix * f.matrix;
    r.factors.push_back(f.factors.front());
  }
  return r;
}

OrbitalRotation random_orthogonal(std::uint64_t seed, int n_orb) {
  if (n_orb < 2) throw std::invalid_argument("random_orthogonal needs N >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd a(n_orb, n_orb);
  for (int j = 0; j < n_orb; ++j)
    for (int i = 0; i < n_orb; ++i) a(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n_orb; ++j)
    if (rmat(j, j) < 0) q.col(j) *= -1.0;
  return {q, {}, "random:" + std::to_string(seed)};
}

GivensDecomposition decompose_givens(const Eigen::MatrixXd& matrix) {
  const int n = static_cast<int>(matrix.rows());
  // Reduce with left multiplications by givens(p,q,t)^T until diagonal;
  // then matrix = G_0 G_1 ... G_k D.
  Eigen::MatrixXd work = matrix;
  GivensDecomposition out;
  for (int col = 0; col < n; ++col) {
    for (int row = n - 1; row > col; --row) {
      const double a = work(col, col), b = work(row, col);
      if (std::abs(b) < 1e-15) continue;
      const double theta = 2.0 * std::atan2(-b, a);
      const OrbitalRotation g = givens(col, row, theta, n);
      work = g.matrix.transpose() * work;
      out.factors.push_back({col, row, theta});
    }
  }
  out.signs.resize(n);
  for (int i = 0; i < n; ++i) out.signs[i] = work(i, i) < 0 ? -1 : 1;
  return out;
}

double orthogonality_error(const Eigen::MatrixXd& matrix) {
  const auto n = matrix.rows();
  return (matrix * matrix.transpose() - Eigen::MatrixXd::Identity(n, n))
      .cwiseAbs()
      .maxCoeff();
}

IntegralTensors rotate_integrals(const IntegralTensors& t,
                                 const Eigen::MatrixXd& rotation) {
  const int n = t.n_orb;
  if (rotation.rows() != n || rotation.cols() != n)
    throw std::invalid_argument("rotation dimension does not match tensors");
  IntegralTensors out = t;
  out.h = rotation * t.h * rotation.transpose();
  out.h = 0.5 * (out.h + out.h.transpose()).eval();

  const auto N = static_cast<std::size_t>(n);
  std::vector<double> cur = t.g, next(cur.size());
  const std::size_t strides[4] = {N * N * N, N * N, N, 1};
  for (int which = 0; which < 4; ++which) {
    const std::size_t stride = strides[which];
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      const std::size_t k = (flat / stride) % N;
      const std::size_t base = flat - k * stride;
      double acc = 0.0;
      for (std::size_t w = 0; w < N; ++w)
        acc += rotation(k, w) * cur[base + w * stride];
      next[flat] = acc;
    }
    cur.swap(next);
  }
  out.g = std::move(cur);
  return out;
}

IntegralTensors rotate_integrals(const IntegralTensors& t,
                                 const OrbitalRotation& rotation) {
  return rotate_integrals(t, rotation.matrix);
}

}  // namespace hcbmeas::chem
