// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/pauli/qubit_hamiltonian.hpp"

#include <vector>

namespace hcbmeas::pauli {

FermionOperator fermion_hamiltonian(const chem::IntegralTensors& t,
                                    QubitOrdering ordering) {
  const int N = t.n_orb;
  auto so = [&](int k, int s) { return spin_orbital(k, s, N, ordering); };
  FermionOperator op;
  if (t.e_nuc != 0.0) op.push_back({t.e_nuc, {}});
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      if (t.h(k, l) == 0.0) continue;
      for (int s = 0; s < 2; ++s)
        op.push_back({t.h(k, l), {{so(k, s), true}, {so(l, s), false}}});
    }
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
          const double v = t.g_at(k, l, m, n);
          if (v == 0.0) continue;
          for (int s = 0; s < 2; ++s)
            for (int u = 0; u < 2; ++u) {
              if (k == l && s == u) continue;  // a+ a+ on one mode vanishes
              if (m == n && s == u) continue;
              op.push_back({0.5 * v,
                            {{so(k, s), true},
                             {so(l, u), true},
                             {so(n, u), false},
                             {so(m, s), false}}});
            }
        }
  return op;
}

PauliSum build_qubit_hamiltonian(const chem::IntegralTensors& t,
                                 QubitOrdering ordering, double threshold) {
  const int n_qubits = 2 * t.n_orb;
  std::vector<ComplexPauliSum> create, annihilate;
  for (int j = 0; j < n_qubits; ++j) {
    create.push_back(jw_ladder({j, true}, n_qubits));
    annihilate.push_back(jw_ladder({j, false}, n_qubits));
  }
  ComplexPauliSum acc(n_qubits);
  for (const auto& term : fermion_hamiltonian(t, ordering)) {
    ComplexPauliSum prod(n_qubits);
    prod.add(PauliString::identity(n_qubits), term.coefficient);
    for (const auto& op : term.ops)
      prod = prod * (op.dagger ? create[op.mode] : annihilate[op.mode]);
    acc.add(prod);
  }
  return prune(acc.to_real(1e-10), threshold).sum;
}

}  // namespace hcbmeas::pauli
