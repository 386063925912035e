// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/hcb/decomposition.hpp"

#include <stdexcept>

#include "hcbmeas/pauli/qubit_hamiltonian.hpp"

namespace hcbmeas::hcb {

bool is_hcb_entry(int k, int l, int m, int n) {
  return (k == l && m == n) || (k == n && l == m) || (k == m && l == n);
}

HCBDecomposition extract_hcb(const chem::IntegralTensors& t,
                             chem::OrbitalRotation basis) {
  const int N = t.n_orb;
  HCBDecomposition d;
  d.basis = basis.matrix.size() ? std::move(basis) : chem::identity_rotation(N);
  if (d.basis.n_orb() != N)
    throw std::invalid_argument("basis rotation has the wrong dimension");
  d.hcb = chem::IntegralTensors(N, t.basis);
  d.hcb.n_elec = t.n_elec;
  d.residual = t;
  d.e_nuc = t.e_nuc;
  d.hcb.e_nuc = t.e_nuc;
  d.residual.e_nuc = 0.0;

  for (int k = 0; k < N; ++k) {
    d.alpha.emplace_back(k, t.h(k, k));
    d.hcb.h(k, k) = t.h(k, k);
    d.residual.h(k, k) = 0.0;
  }
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      if (k != l) d.beta.push_back({k, l, 0.5 * t.g_at(k, k, l, l)});
      d.gamma.push_back({k, l, 0.5 * t.g_at(k, l, l, k)});
      if (k != l) d.delta.push_back({k, l, 0.5 * t.g_at(k, l, k, l)});
    }
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l)
      for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n)
          if (is_hcb_entry(k, l, m, n)) {
            d.hcb.g_at(k, l, m, n) = t.g_at(k, l, m, n);
            d.residual.g_at(k, l, m, n) = 0.0;
          }
  return d;
}

chem::IntegralTensors reconstruct(const HCBDecomposition& d) {
  chem::IntegralTensors out = d.residual;
  out.e_nuc += d.hcb.e_nuc;
  out.h += d.hcb.h;
  for (std::size_t i = 0; i < out.g.size(); ++i) out.g[i] += d.hcb.g[i];
  return out;
}

std::array<grouping::CommutingGroup, 3> hcb_to_groups(
    const HCBDecomposition& d, pauli::QubitOrdering ordering,
    double prune_threshold) {
  using grouping::GroupKind;
  const int N = d.n_orb();
  const auto image = pauli::build_qubit_hamiltonian(d.hcb, ordering, prune_threshold);
  std::array<grouping::CommutingGroup, 3> groups;
  groups[0].kind = GroupKind::diagonal_Z;
  groups[1].kind = GroupKind::YX_XY;
  groups[2].kind = GroupKind::YY_XX;
  for (const auto& [p, c] : image) {
    if (p.is_diagonal()) {
      groups[0].members.emplace_back(p, c);
      continue;
    }
    int k = 0;
    while (k < N) {
      const int up = pauli::spin_orbital(k, 0, N, ordering);
      const int dn = pauli::spin_orbital(k, 1, N, ordering);
      if (((p.x >> up) & 1ULL) || ((p.x >> dn) & 1ULL)) break;
      ++k;
    }
    const char lu = p.letter(pauli::spin_orbital(k, 0, N, ordering));
    const char ld = p.letter(pauli::spin_orbital(k, 1, N, ordering));
    groups[lu == ld ? 2 : 1].members.emplace_back(p, c);
  }
  for (const auto& g : groups)
    if (!grouping::internally_commuting(g))
      throw std::logic_error("HCB group " + grouping::to_string(g.kind) +
                             " is not fully commuting");
  return groups;
}

}  // namespace hcbmeas::hcb
