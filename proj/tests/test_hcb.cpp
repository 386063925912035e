// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "hcbmeas/chem/geometry.hpp"
#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/chem/sto3g.hpp"
#include "hcbmeas/hcb/decomposition.hpp"
#include "hcbmeas/hcb/protocol.hpp"
#include "hcbmeas/pauli/qubit_hamiltonian.hpp"
#include "hcbmeas/sim/eigensolver.hpp"
#include "oracles.hpp"

using namespace hcbmeas;
using pauli::QubitOrdering;

namespace {

chem::IntegralTensors chain(int n, double spacing = 1.5) {
  return chem::compute_minimal_basis_integrals(
      chem::build_geometry(n, spacing, chem::Shape::line));
}

std::vector<chem::OrbitalRotation> graph_set(const std::vector<std::string>& edges, int n) {
  std::vector<chem::OrbitalRotation> out;
  for (const auto& e : edges)
    out.push_back(chem::graph_rotation(chem::PairingGraph::parse(e), M_PI / 2, n));
  return out;
}

// True when every basis state with a singly occupied orbital is mapped to
// zero-overlap with doubly-occupied-only states and vice versa.
bool preserves_pairing(const oracle::Dense& h, int n_orb, QubitOrdering ord) {
  auto paired = [&](std::uint64_t b) {
    for (int k = 0; k < n_orb; ++k)
      if (((b >> pauli::spin_orbital(k, 0, n_orb, ord)) & 1) !=
          ((b >> pauli::spin_orbital(k, 1, n_orb, ord)) & 1))
        return false;
    return true;
  };
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      if (paired(static_cast<std::uint64_t>(i)) != paired(static_cast<std::uint64_t>(j)) &&
          std::abs(h(i, j)) > 1e-12)
        return false;
  return true;
}

}  // namespace

TEST(Decomposition, EntryPatterns) {
  EXPECT_TRUE(hcb::is_hcb_entry(0, 0, 1, 1));
  EXPECT_TRUE(hcb::is_hcb_entry(0, 1, 1, 0));
  EXPECT_TRUE(hcb::is_hcb_entry(0, 1, 0, 1));
  EXPECT_TRUE(hcb::is_hcb_entry(2, 2, 2, 2));
  EXPECT_FALSE(hcb::is_hcb_entry(0, 1, 2, 2));
  EXPECT_FALSE(hcb::is_hcb_entry(0, 0, 0, 1));
}

TEST(Decomposition, SplitReconstructsInput) {
  const auto t = chem::rotate_integrals(chain(4), chem::random_orthogonal(2, 4));
  const auto d = hcb::extract_hcb(t);
  EXPECT_LT(chem::max_abs_diff(hcb::reconstruct(d), t), 1e-15);
  EXPECT_EQ(d.residual.e_nuc, 0.0);
  EXPECT_DOUBLE_EQ(d.e_nuc, t.e_nuc);
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(d.residual.h(k, k), 0.0);
    for (int l = 0; l < 4; ++l) {
      EXPECT_EQ(d.residual.g_at(k, k, l, l), 0.0);
      EXPECT_EQ(d.residual.g_at(k, l, l, k), 0.0);
      EXPECT_EQ(d.residual.g_at(k, l, k, l), 0.0);
    }
  }
  EXPECT_EQ(d.alpha.size(), 4u);
}

class HcbGroupsTest : public ::testing::TestWithParam<QubitOrdering> {};

TEST_P(HcbGroupsTest, ThreeGroupsReproduceTheHcbOperator) {
  const auto ord = GetParam();
  const auto t = chem::rotate_integrals(chain(3, 1.1), chem::random_orthogonal(8, 3));
  const auto d = hcb::extract_hcb(t);
  const auto groups = hcb::hcb_to_groups(d, ord);
  pauli::PauliSum total(6);
  for (const auto& g : groups) {
    for (std::size_t i = 0; i < g.members.size(); ++i)
      for (std::size_t j = i + 1; j < g.members.size(); ++j)
        ASSERT_TRUE(pauli::commutes(g.members[i].first, g.members[j].first));
    total += g.to_sum();
  }
  EXPECT_EQ(groups[0].kind, grouping::GroupKind::diagonal_Z);
  EXPECT_EQ(groups[1].kind, grouping::GroupKind::YX_XY);
  EXPECT_EQ(groups[2].kind, grouping::GroupKind::YY_XX);
  const oracle::Dense fock(oracle::fock_hamiltonian(d.hcb, ord));
  EXPECT_LT(oracle::max_abs(oracle::sum_matrix(total) - fock), 1e-12);
  EXPECT_TRUE(preserves_pairing(fock, 3, ord));
  const auto direct = pauli::build_qubit_hamiltonian(d.hcb, ord);
  EXPECT_LT(max_abs_diff(total, direct), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Orderings, HcbGroupsTest,
                         ::testing::Values(QubitOrdering::interleaved,
                                           QubitOrdering::reordered));

TEST(Protocol, SeniorityZeroStateIsExactWithIdentityRotation) {
  chem::Geometry g;
  g.atoms = {{"H", {0, 0, 0}}, {"H", {0, 0, 0.7414}}};
  // Symmetry-adapted orbitals: the ground state is pure pair occupation.
  const auto t = chem::compute_minimal_basis_integrals(g, chem::OrbitalMode::hartree_fock);
  const auto h = pauli::build_qubit_hamiltonian(t);
  const auto gs = sim::ground_state(h, 2);
  const auto rec = hcb::run_protocol(t, {chem::identity_rotation(2)}, gs.state);
  ASSERT_EQ(rec.size(), 1u);
  EXPECT_LT(std::abs(rec[0].cumulative - gs.energy), 1e-12);
}

TEST(Protocol, BookkeepingAndAccuracyForLinearH4) {
  const auto t = chain(4);
  const auto h = pauli::build_qubit_hamiltonian(t);
  const auto gs = sim::ground_state(h, 4);
  const auto rec = hcb::run_protocol(t, graph_set({"0-1,2-3", "0-3,1-2", "0-2,1-3"}, 4), gs.state);
  ASSERT_EQ(rec.size(), 3u);
  double prev = 1e9;
  for (const auto& r : rec) {
    EXPECT_NEAR(r.cumulative + r.residual_expectation, gs.energy, 1e-8);
    const double err = std::abs(r.cumulative - gs.energy);
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 2e-3);
  const auto curve = hcb::protocol_error_curve(rec, gs.energy);
  EXPECT_EQ(curve.front().step, 0);
  EXPECT_EQ(curve.size(), 4u);
  EXPECT_EQ(hcb::protocol_grouping(rec).size(), 9u);
  const auto target = hcb::protocol_shots(rec, gs.state, 1e-3, hcb::ShotFrame::target);
  const auto measured = hcb::protocol_shots(rec, gs.state, 1e-3, hcb::ShotFrame::measured);
  EXPECT_EQ(target.per_group.size(), 9u);
  EXPECT_GT(target.total, 0.0);
  EXPECT_GT(measured.total, 0.0);
}

TEST(Protocol, RejectsMismatchedInput) {
  const auto t = chain(4);
  const sim::Statevector psi(6);
  EXPECT_THROW(hcb::run_protocol(t, {chem::identity_rotation(4)}, psi), std::invalid_argument);
  EXPECT_THROW(hcb::run_protocol(t, {}, sim::Statevector(8)), std::invalid_argument);
}
