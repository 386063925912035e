// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "hcbmeas/chem/geometry.hpp"
#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/chem/sto3g.hpp"
#include "hcbmeas/grouping/clifford.hpp"
#include "hcbmeas/grouping/coloring.hpp"
#include "hcbmeas/grouping/depth.hpp"
#include "hcbmeas/grouping/serialize.hpp"
#include "hcbmeas/grouping/shots.hpp"
#include "hcbmeas/pauli/qubit_hamiltonian.hpp"
#include "hcbmeas/sim/circuit.hpp"
#include "hcbmeas/sim/eigensolver.hpp"
#include "oracles.hpp"

using namespace hcbmeas;
using grouping::GroupingResult;
using pauli::Commutation;
using pauli::PauliString;
using pauli::QubitOrdering;

namespace {

pauli::PauliSum h4() {
  return pauli::build_qubit_hamiltonian(chem::compute_minimal_basis_integrals(
      chem::build_geometry(4, 1.5, chem::Shape::line)));
}

oracle::Dense circuit_matrix(const sim::Circuit& c) {
  const auto dim = Eigen::Index{1} << c.n_qubits();
  oracle::Dense u(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b)
    u.col(b) = sim::apply(c, sim::Statevector::basis(c.n_qubits(), static_cast<std::uint64_t>(b)))
                   .amplitudes();
  return u;
}

void expect_valid(const GroupingResult& r, const pauli::PauliSum& h, Commutation mode) {
  EXPECT_TRUE(grouping::is_partition(r, h)) << r.method;
  for (const auto& g : r.groups) {
    // Exhaustive pair check, independent of the library's own helper.
    for (std::size_t i = 0; i < g.members.size(); ++i)
      for (std::size_t j = i + 1; j < g.members.size(); ++j)
        ASSERT_TRUE(pauli::commutes(g.members[i].first, g.members[j].first, mode)) << r.method;
  }
}

}  // namespace

TEST(Coloring, AllMethodsPartitionIntoCommutingGroups) {
  const auto h = h4();
  for (auto mode : {Commutation::fully, Commutation::qubitwise}) {
    expect_valid(grouping::lf_grouping(h, mode), h, mode);
    expect_valid(grouping::rlf_grouping(h, mode), h, mode);
  }
  expect_valid(grouping::si_grouping(h), h, Commutation::fully);
}

TEST(Coloring, IsDeterministic) {
  const auto h = h4();
  const auto a = grouping::to_json(grouping::rlf_grouping(h)).dump();
  const auto b = grouping::to_json(grouping::rlf_grouping(h)).dump();
  EXPECT_EQ(a, b);
}

TEST(Coloring, SmallHandCase) {
  // X0 and Z0 anticommute; Z0 Z1 commutes with both Z0 and X0 X1.
  pauli::PauliSum s(2);
  s.add(PauliString::parse("X0", 2), 1.0);
  s.add(PauliString::parse("Z0", 2), 0.5);
  s.add(PauliString::parse("X0 X1", 2), 0.25);
  s.add(PauliString::parse("Z0 Z1", 2), 0.125);
  for (const auto& r : {grouping::lf_grouping(s), grouping::rlf_grouping(s), grouping::si_grouping(s)})
    EXPECT_EQ(r.size(), 2u) << r.method;
}

TEST(Clifford, ConjugationMatchesDenseMatrices) {
  std::mt19937_64 rng(4);
  sim::Circuit c(3, QubitOrdering::interleaved);
  c.h(0).s(1).cnot(0, 2).cz(1, 2).sdg(2).h(1).cnot(2, 0).x(1).z(0);
  const oracle::Dense U = circuit_matrix(c);
  for (int trial = 0; trial < 40; ++trial) {
    const PauliString p(3, rng() & 7, rng() & 7);
    const auto sp = grouping::conjugate(p, c);
    const oracle::Dense lhs = U * oracle::pauli_matrix(p) * U.adjoint();
    const oracle::Dense rhs = (sp.negative ? -1.0 : 1.0) * oracle::pauli_matrix(sp.p);
    ASSERT_LT(oracle::max_abs(lhs - rhs), 1e-12) << p.to_string();
  }
}

TEST(Clifford, DiagonalizersAreCertifiedAndDiagonal) {
  const auto h = h4();
  auto r = grouping::rlf_grouping(h);
  grouping::attach_diagonalizers(r);
  int checked = 0;
  for (const auto& g : r.groups) {
    ASSERT_TRUE(g.diagonalizer);
    EXPECT_TRUE(grouping::certify(g, *g.diagonalizer));
    if (checked++ < 4) {
      const oracle::Dense U = circuit_matrix(*g.diagonalizer);
      for (const auto& [p, c] : g.members) {
        const oracle::Dense d = U * oracle::pauli_matrix(p) * U.adjoint();
        const oracle::Dense off = d - oracle::Dense(d.diagonal().asDiagonal());
        EXPECT_LT(oracle::max_abs(off), 1e-12);
      }
    }
  }
  grouping::CommutingGroup bad;
  bad.members = {{PauliString::parse("X0", 2), 1.0}};
  sim::Circuit nothing(2, QubitOrdering::interleaved);
  EXPECT_FALSE(grouping::certify(bad, nothing));
}

TEST(Shots, FormulaAndScaling) {
  const auto p = PauliString::parse("X0", 2);
  EXPECT_NEAR(grouping::term_shots(p, 0.5, 0.6, 1e-3), std::pow(0.5 * 0.8 / 1e-3, 2), 1e-6);
  EXPECT_EQ(grouping::term_shots(PauliString::identity(2), 3.0, 1.0, 1e-3), 0.0);
  const auto h = h4();
  const auto gs = sim::ground_state(h, 4);
  const auto si = grouping::si_grouping(h);
  const auto m1 = grouping::estimate_shots(si, gs.state, 1e-3);
  const auto m2 = grouping::estimate_shots(si, gs.state, 5e-4);
  EXPECT_NEAR(m2.total / m1.total, 4.0, 1e-12);
  double manual = 0.0;
  for (const auto& g : si.groups) {
    double worst = 0.0;
    for (const auto& [q, w] : g.members) {
      if (q.is_identity()) continue;
      const double e = sim::pauli_expectation(q, gs.state);
      worst = std::max(worst, w * w * (1 - e * e) / 1e-6);
    }
    manual += worst;
  }
  EXPECT_NEAR(m1.total, manual, 1e-6 * manual);
}

TEST(Depth, CountsLayersAndTwoQubitLayers) {
  sim::Circuit c(3, QubitOrdering::interleaved);
  c.h(0).h(1).cnot(0, 1).rz(2, 0.1).cz(1, 2).x(0);
  const auto d = grouping::depth_overhead(c);
  EXPECT_EQ(d.total, 3);
  EXPECT_EQ(d.two_qubit, 2);
  for (auto edges : {"0-1,2-3", "0-3,1-2", "0-2,1-3"}) {
    const auto r = chem::graph_rotation(chem::PairingGraph::parse(edges), M_PI / 2, 4);
    const auto di = grouping::depth_overhead(sim::rotation_circuit(r, QubitOrdering::interleaved));
    const auto dr = grouping::depth_overhead(sim::rotation_circuit(r, QubitOrdering::reordered));
    EXPECT_LT(dr.two_qubit, di.two_qubit) << edges;
  }
}

TEST(Serialize, JsonRoundTrip) {
  const auto h = h4();
  const auto r = grouping::si_grouping(h);
  const auto back = grouping::grouping_from_json(grouping::to_json(r), h.n_qubits());
  ASSERT_EQ(back.size(), r.size());
  EXPECT_TRUE(grouping::is_partition(back, h));
  EXPECT_EQ(grouping::to_json(back).dump(), grouping::to_json(r).dump());
}
