// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "hcbmeas/chem/fcidump.hpp"
#include "hcbmeas/chem/geometry.hpp"
#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/chem/sto3g.hpp"
#include "oracles.hpp"

using namespace hcbmeas::chem;

namespace {

Geometry h2() {
  Geometry g;
  g.atoms = {{"H", {0, 0, 0}}, {"H", {0, 0, 0.7414}}};
  return g;
}

double fci_energy(const IntegralTensors& t) {
  const auto h = oracle::fock_hamiltonian(t, hcbmeas::pauli::QubitOrdering::interleaved);
  // Restrict to the n_elec sector by penalising every other particle number.
  const Eigen::MatrixXcd dense(h);
  Eigen::MatrixXcd shifted = dense;
  for (Eigen::Index b = 0; b < dense.rows(); ++b)
    if (std::popcount(static_cast<std::uint64_t>(b)) != t.n_elec) shifted(b, b) += 1e3;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(shifted);
  return es.eigenvalues()(0);
}

}  // namespace

TEST(Sto3g, BoysFunctionLimits) {
  EXPECT_NEAR(boys_f0(0.0), 1.0, 1e-14);
  EXPECT_NEAR(boys_f0(1.0), 0.5 * std::sqrt(M_PI) * std::erf(1.0), 1e-13);
  EXPECT_NEAR(boys_f0(50.0), 0.5 * std::sqrt(M_PI / 50.0), 1e-12);
}

TEST(Sto3g, HydrogenMoleculeHartreeFockIntegrals) {
  const auto t = compute_minimal_basis_integrals(h2(), OrbitalMode::hartree_fock);
  ASSERT_EQ(t.n_orb, 2);
  EXPECT_EQ(t.n_elec, 2);
  // Literature values for STO-3G H2 at 0.7414 Angstrom.
  EXPECT_NEAR(t.e_nuc, 0.71375399, 1e-6);
  EXPECT_NEAR(t.h(0, 0), -1.25246357, 2e-5);
  EXPECT_NEAR(t.h(1, 1), -0.47594871, 2e-5);
  EXPECT_NEAR(t.h(0, 1), 0.0, 1e-10);
  EXPECT_NEAR(t.chem(0, 0, 0, 0), 0.67449314, 2e-5);
  EXPECT_NEAR(t.chem(1, 1, 1, 1), 0.69739794, 2e-5);
  EXPECT_NEAR(t.chem(0, 0, 1, 1), 0.66347120, 2e-5);
  EXPECT_NEAR(std::abs(t.chem(0, 1, 1, 0)), 0.18128754, 2e-5);
}

TEST(Sto3g, HydrogenMoleculeFullCI) {
  const auto hf = compute_minimal_basis_integrals(h2(), OrbitalMode::hartree_fock);
  const auto lo = compute_minimal_basis_integrals(h2(), OrbitalMode::lowdin);
  EXPECT_NEAR(fci_energy(hf), -1.13728383, 2e-5);
  // Full CI does not depend on the orbital basis.
  EXPECT_NEAR(fci_energy(lo), fci_energy(hf), 1e-10);
}

TEST(Sto3g, MatchesIndependentCodeForLinearH4) {
  const auto ref = read_fcidump(std::string(HCBMEAS_TEST_DATA) + "/h4_line_1p5_pyscf.fcidump");
  const auto t = compute_minimal_basis_integrals(build_geometry(4, 1.5, Shape::line));
  EXPECT_NEAR(t.e_nuc, ref.e_nuc, 1e-10);
  EXPECT_LT(max_abs_diff(t, ref), 1e-7);
}

TEST(Integrals, SymmetriesHold) {
  const auto t = compute_minimal_basis_integrals(build_geometry(4, 1.5, Shape::line));
  EXPECT_LT(symmetry_violation(t), 1e-12);
  EXPECT_NO_THROW(check_invariants(t));
  EXPECT_LT((t.h - t.h.transpose()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Geometry, ShapesAndValidation) {
  const auto ring = build_geometry(6, 1.5, Shape::ring);
  EXPECT_NEAR(ring.min_distance(), 1.5, 1e-12);
  const auto square = build_geometry(4, 1.5, Shape::square);
  EXPECT_NEAR(square.min_distance(), 1.5, 1e-12);
  EXPECT_THROW(build_geometry(3, 1.5, Shape::square), std::invalid_argument);
  EXPECT_THROW(build_geometry(4, 1.5, Shape::random), std::invalid_argument);
  const auto r1 = build_geometry(6, 1.5, Shape::random, 11);
  const auto r2 = build_geometry(6, 1.5, Shape::random, 11);
  for (std::size_t i = 0; i < r1.size(); ++i)
    EXPECT_EQ(r1.atoms[i].position, r2.atoms[i].position);
  const auto parsed = parse_xyz(format_xyz(ring));
  ASSERT_EQ(parsed.size(), ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i)
    EXPECT_LT((parsed.atoms[i].position - ring.atoms[i].position).norm(), 1e-9);
}

TEST(Fcidump, RoundTrip) {
  const auto t = compute_minimal_basis_integrals(build_geometry(4, 1.2, Shape::ring));
  const auto back = parse_fcidump(format_fcidump(t));
  EXPECT_LT(max_abs_diff(t, back), 1e-14);
  EXPECT_EQ(back.n_elec, t.n_elec);
  EXPECT_DOUBLE_EQ(back.e_nuc, t.e_nuc);
}

TEST(Fcidump, RejectsConflicts) {
  const std::string text =
      "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n 0.5 1 1 1 1\n 0.6 1 1 1 1\n";
  EXPECT_THROW(parse_fcidump(text), FcidumpError);
}

TEST(Rotation, GivensAndGraphs) {
  const auto g = givens(0, 2, 0.7, 3);
  EXPECT_NEAR(g.matrix(0, 0), std::cos(0.35), 1e-15);
  EXPECT_LT(orthogonality_error(g.matrix), 1e-15);
  const auto graph = PairingGraph::parse("0-3,1-2");
  EXPECT_EQ(graph.to_string(), "0-3,1-2");
  EXPECT_THROW(validate(PairingGraph::parse("0-1,1-2"), 4), std::invalid_argument);
  const auto r = graph_rotation(graph, M_PI / 2, 4);
  EXPECT_EQ(r.factors.size(), 2u);
  EXPECT_LT(orthogonality_error(r.matrix), 1e-14);
}

TEST(Rotation, GivensDecompositionReconstructs) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = random_orthogonal(seed, 5);
    EXPECT_LT(orthogonality_error(r.matrix), 1e-12);
    const auto d = decompose_givens(r.matrix);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(5, 5);
    for (const auto& f : d.factors) m = m * givens(f.p, f.q, f.theta, 5).matrix;
    for (int i = 0; i < 5; ++i) m.col(i) *= d.signs[static_cast<std::size_t>(i)];
    EXPECT_LT((m - r.matrix).cwiseAbs().maxCoeff(), 1e-12) << "seed " << seed;
  }
}

TEST(Rotation, IntegralsTransformInvariantly) {
  const auto t = compute_minimal_basis_integrals(build_geometry(4, 1.5, Shape::line));
  const auto r = random_orthogonal(3, 4);
  const auto rt = rotate_integrals(t, r);
  EXPECT_LT(symmetry_violation(rt), 1e-12);
  EXPECT_NEAR(rt.h.trace(), t.h.trace(), 1e-12);
  const auto back = rotate_integrals(rt, r.transpose());
  EXPECT_LT(max_abs_diff(back, t), 1e-12);
  EXPECT_NEAR(fci_energy(rt), fci_energy(t), 1e-9);
}
