// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "hcbmeas/chem/geometry.hpp"
#include "hcbmeas/chem/sto3g.hpp"
#include "hcbmeas/pauli/jordan_wigner.hpp"
#include "hcbmeas/pauli/pauli_string.hpp"
#include "hcbmeas/pauli/pauli_sum.hpp"
#include "hcbmeas/pauli/qubit_hamiltonian.hpp"
#include "oracles.hpp"

using namespace hcbmeas;
using pauli::PauliString;
using pauli::QubitOrdering;

namespace {

PauliString random_string(std::mt19937_64& rng, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return PauliString(n, rng() & mask, rng() & mask);
}

}  // namespace

TEST(PauliString, ParseAndFormat) {
  const auto p = PauliString::parse("Z5 X0 Y3", 6);
  EXPECT_EQ(p.to_string(), "X0 Y3 Z5");
  EXPECT_EQ(p.weight(), 3);
  EXPECT_EQ(p.letter(3), 'Y');
  EXPECT_EQ(PauliString::parse("I", 4).to_string(), "I");
  EXPECT_THROW(PauliString::parse("X7", 4), std::invalid_argument);
}

TEST(PauliString, ProductMatchesDenseMatrices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_string(rng, 4), b = random_string(rng, 4);
    const auto prod = pauli::multiply(a, b);
    const oracle::Dense lhs = oracle::pauli_matrix(a) * oracle::pauli_matrix(b);
    const oracle::Dense rhs = pauli::i_power(prod.phase) * oracle::pauli_matrix(prod.result);
    ASSERT_LT(oracle::max_abs(lhs - rhs), 1e-14) << a.to_string() << " * " << b.to_string();
  }
}

TEST(PauliString, CommutationMatchesDenseCommutator) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_string(rng, 4), b = random_string(rng, 4);
    const oracle::Dense A = oracle::pauli_matrix(a), B = oracle::pauli_matrix(b);
    const bool dense_commute = oracle::max_abs(A * B - B * A) < 1e-12;
    EXPECT_EQ(pauli::commutes(a, b, pauli::Commutation::fully), dense_commute);
    bool qw = true;
    for (int q = 0; q < 4; ++q) {
      const char x = a.letter(q), y = b.letter(q);
      if (x != 'I' && y != 'I' && x != y) qw = false;
    }
    EXPECT_EQ(pauli::commutes(a, b, pauli::Commutation::qubitwise), qw);
    if (qw) EXPECT_TRUE(dense_commute);
  }
}

TEST(PauliSum, ArithmeticAndPruning) {
  pauli::PauliSum s(3);
  s.add(PauliString::parse("X0 Z1", 3), 0.5);
  s.add(PauliString::parse("X0 Z1", 3), -0.5);
  EXPECT_TRUE(s.empty());
  s.add(PauliString::identity(3), 2.0);
  s.add(PauliString::parse("Y2", 3), 1e-13);
  EXPECT_EQ(s.count_without_identity(), 1u);
  const auto pr = pauli::prune(s, 1e-12);
  EXPECT_EQ(pr.sum.size(), 1u);
  EXPECT_EQ(pr.dropped_terms, 1u);
  EXPECT_NEAR(pr.dropped_weight, 1e-13, 1e-20);
  const auto round = pauli::PauliSum::parse(s.to_text(), 3);
  EXPECT_LT(max_abs_diff(round, s), 1e-24);
  EXPECT_THROW(pauli::PauliSum::parse("+1.0 X0\n+2.0 X0\n", 3), std::invalid_argument);
}

TEST(JordanWigner, LadderMatchesFockSpace) {
  const int n = 4;
  for (int j = 0; j < n; ++j) {
    const auto a = pauli::jw_ladder({j, false}, n);
    const auto ad = pauli::jw_ladder({j, true}, n);
    oracle::Dense ma = oracle::Dense::Zero(16, 16), mad = ma;
    for (const auto& [p, c] : a.terms()) ma += c * oracle::pauli_matrix(p);
    for (const auto& [p, c] : ad.terms()) mad += c * oracle::pauli_matrix(p);
    EXPECT_LT(oracle::max_abs(ma - oracle::Dense(oracle::annihilator(j, n))), 1e-14);
    EXPECT_LT(oracle::max_abs(mad - oracle::Dense(oracle::annihilator(j, n)).adjoint()), 1e-14);
  }
}

TEST(JordanWigner, SpinOrbitalOrderings) {
  EXPECT_EQ(pauli::spin_orbital(2, 1, 4, QubitOrdering::interleaved), 5);
  EXPECT_EQ(pauli::spin_orbital(2, 1, 4, QubitOrdering::reordered), 6);
  EXPECT_EQ(pauli::parse_ordering("reordered"), QubitOrdering::reordered);
}

class QubitHamiltonianTest : public ::testing::TestWithParam<QubitOrdering> {};

TEST_P(QubitHamiltonianTest, MatchesFockSpaceHamiltonian) {
  // No spatial symmetry, so a mislabelled qubit cannot go unnoticed.
  chem::Geometry g;
  g.atoms = {{"H", {0, 0, 0}}, {"H", {0, 0, 0.9}}, {"H", {0.4, 0, 2.3}}};
  auto t = chem::compute_minimal_basis_integrals(g);
  t.n_elec = 2;
  const auto h = pauli::build_qubit_hamiltonian(t, GetParam());
  const oracle::Dense fock(oracle::fock_hamiltonian(t, GetParam()));
  EXPECT_LT(oracle::max_abs(oracle::sum_matrix(h) - fock), 1e-11);
}

INSTANTIATE_TEST_SUITE_P(Orderings, QubitHamiltonianTest,
                         ::testing::Values(QubitOrdering::interleaved,
                                           QubitOrdering::reordered));

TEST(QubitHamiltonian, LinearH4TermCount) {
  const auto t = chem::compute_minimal_basis_integrals(
      chem::build_geometry(4, 1.5, chem::Shape::line));
  const auto h = pauli::build_qubit_hamiltonian(t);
  EXPECT_EQ(h.size(), 361u);
  EXPECT_TRUE(h.contains_identity());
  const auto hr = pauli::build_qubit_hamiltonian(t, QubitOrdering::reordered);
  EXPECT_EQ(hr.size(), 361u);
}
