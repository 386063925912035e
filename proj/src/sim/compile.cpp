// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/sim/compile.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "hcbmeas/pauli/jordan_wigner.hpp"

namespace hcbmeas::sim {

void append_pauli_rotation(Circuit& circuit, const pauli::PauliString& p,
                           double beta) {
  if (p.is_identity() || beta == 0.0) return;  // global phase only
  std::vector<int> support;
  for (std::uint64_t m = p.support(); m; m &= m - 1)
    support.push_back(std::countr_zero(m));
  for (int q : support) {
    const char l = p.letter(q);
    if (l == 'X') {
      circuit.h(q);
    } else if (l == 'Y') {
      circuit.sdg(q);
      circuit.h(q);
    }
  }
  for (std::size_t i = 0; i + 1 < support.size(); ++i)
    circuit.cnot(support[i], support[i + 1]);
  circuit.rz(support.back(), 2.0 * beta);
  for (std::size_t i = support.size() - 1; i-- > 0;)
    circuit.cnot(support[i], support[i + 1]);
  for (int q : support) {
    const char l = p.letter(q);
    if (l == 'X') {
      circuit.h(q);
    } else if (l == 'Y') {
      circuit.h(q);
      circuit.s(q);
    }
  }
}

std::vector<std::pair<pauli::PauliString, double>> orbital_gate_generator(
    const Gate& gate, int n_orb, pauli::QubitOrdering ordering) {
  using pauli::spin_orbital;
  const int nq = 2 * n_orb;
  pauli::FermionOperator k;
  if (gate.kind == GateKind::UR) {
    for (int s = 0; s < 2; ++s) {
      const int i = spin_orbital(gate.a, s, n_orb, ordering);
      const int j = spin_orbital(gate.b, s, n_orb, ordering);
      k.push_back({1.0, {{i, true}, {j, false}}});
      k.push_back({-1.0, {{j, true}, {i, false}}});
    }
  } else if (gate.kind == GateKind::UC) {
    const pauli::FermionTerm a{
        1.0,
        {{spin_orbital(gate.a, 0, n_orb, ordering), true},
         {spin_orbital(gate.a, 1, n_orb, ordering), true},
         {spin_orbital(gate.b, 1, n_orb, ordering), false},
         {spin_orbital(gate.b, 0, n_orb, ordering), false}}};
    auto adag = pauli::hermitian_conjugate(a);
    adag.coefficient = -1.0;
    k = {a, adag};
  } else {
    throw std::invalid_argument("not an orbital gate");
  }
  const auto image = pauli::jw_encode(k, nq);
  std::vector<std::pair<pauli::PauliString, double>> out;
  for (const auto& [p, c] : image.terms()) {
    if (std::abs(c.real()) > 1e-12)
      throw std::logic_error("orbital gate generator is not anti-Hermitian");
    if (std::abs(c.imag()) > 1e-14) out.emplace_back(p, c.imag());
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (!pauli::commutes(out[i].first, out[j].first))
        throw std::logic_error("orbital gate generator terms do not commute");
  return out;
}

Circuit compile_elementary(const Circuit& circuit) {
  Circuit out(circuit.n_qubits(), circuit.ordering());
  for (const auto& g : circuit.gates()) {
    if (g.kind != GateKind::UR && g.kind != GateKind::UC) {
      out.add(g);
      continue;
    }
    // exp(t K) with K = sum i a_j P_j and t = angle/2 equals the product of
    // exp(-i beta_j P_j) with beta_j = -t a_j.
    const double t = g.angle / 2.0;
    for (const auto& [p, a] :
         orbital_gate_generator(g, circuit.n_orb(), circuit.ordering()))
      append_pauli_rotation(out, p, -t * a);
  }
  return out;
}

}  // namespace hcbmeas::sim
