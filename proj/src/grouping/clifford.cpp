// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/grouping/clifford.hpp"

#include <bit>
#include <stdexcept>

namespace hcbmeas::grouping {

namespace {

using sim::GateKind;

inline int bit(std::uint64_t m, int q) { return static_cast<int>((m >> q) & 1ULL); }
inline void assign(std::uint64_t& m, int q, int v) {
  m = (m & ~(1ULL << q)) | (static_cast<std::uint64_t>(v & 1) << q);
}

void hadamard(SignedPauli& sp, int q) {
  auto& p = sp.p;
  const int x = bit(p.x, q), z = bit(p.z, q);
  sp.negative ^= (x & z) != 0;
  assign(p.x, q, z);
  assign(p.z, q, x);
}

void phase(SignedPauli& sp, int q) {
  auto& p = sp.p;
  const int x = bit(p.x, q), z = bit(p.z, q);
  sp.negative ^= (x & z) != 0;
  assign(p.z, q, z ^ x);
}

void cnot(SignedPauli& sp, int c, int t) {
  auto& p = sp.p;
  const int xc = bit(p.x, c), zc = bit(p.z, c);
  const int xt = bit(p.x, t), zt = bit(p.z, t);
  sp.negative ^= (xc & zt & (xt ^ zc ^ 1)) != 0;
  assign(p.x, t, xt ^ xc);
  assign(p.z, c, zc ^ zt);
}

}  // namespace

void conjugate_in_place(SignedPauli& sp, const sim::Gate& g) {
  switch (g.kind) {
    case GateKind::X:
      sp.negative ^= bit(sp.p.z, g.a) != 0;
      return;
    case GateKind::Z:
      sp.negative ^= bit(sp.p.x, g.a) != 0;
      return;
    case GateKind::H:
      hadamard(sp, g.a);
      return;
    case GateKind::S:
      phase(sp, g.a);
      return;
    case GateKind::Sdg:
      for (int i = 0; i < 3; ++i) phase(sp, g.a);
      return;
    case GateKind::CNOT:
      cnot(sp, g.a, g.b);
      return;
    case GateKind::CZ:
      hadamard(sp, g.b);
      cnot(sp, g.a, g.b);
      hadamard(sp, g.b);
      return;
    default:
      throw std::invalid_argument("gate " + sim::to_string(g.kind) +
                                  " is not a supported Clifford");
  }
}

SignedPauli conjugate(const pauli::PauliString& p, const sim::Circuit& circuit) {
  SignedPauli sp{p, false};
  for (const auto& g : circuit.gates()) conjugate_in_place(sp, g);
  return sp;
}

sim::Circuit diagonalizer(const std::vector<pauli::PauliString>& strings) {
  if (strings.empty()) throw std::invalid_argument("empty group");
  const int n = strings.front().n_qubits;
  for (std::size_t i = 0; i < strings.size(); ++i)
    for (std::size_t j = i + 1; j < strings.size(); ++j)
      if (!pauli::commutes(strings[i], strings[j]))
        throw std::invalid_argument("group members do not commute: " +
                                    strings[i].to_string() + " vs " +
                                    strings[j].to_string());

  sim::Circuit circuit(n, pauli::QubitOrdering::interleaved);
  std::vector<SignedPauli> work;
  for (const auto& p : strings) work.push_back({p, false});
  auto push = [&](const sim::Gate& g) {
    circuit.add(g);
    for (auto& w : work) conjugate_in_place(w, g);
  };

  for (;;) {
    const SignedPauli* pivot_str = nullptr;
    for (const auto& w : work)
      if (w.p.x != 0) {
        pivot_str = &w;
        break;
      }
    if (!pivot_str) break;
    const std::size_t idx = static_cast<std::size_t>(pivot_str - work.data());
    const int q = std::countr_zero(work[idx].p.x);
    if (bit(work[idx].p.z, q)) push({GateKind::S, q});
    for (std::uint64_t m = work[idx].p.x & ~(1ULL << q); m; m &= m - 1)
      push({GateKind::CNOT, q, std::countr_zero(m)});
    for (std::uint64_t m = work[idx].p.z & ~(1ULL << q); m; m &= m - 1)
      push({GateKind::CZ, q, std::countr_zero(m)});
    if (bit(work[idx].p.z, q)) push({GateKind::S, q});
    push({GateKind::H, q});
    if (work[idx].p.x != 0)
      throw std::logic_error("diagonalizer failed to clear pivot string");
  }
  for (const auto& w : work)
    if (w.p.x != 0) throw std::logic_error("diagonalizer certificate failed");
  return circuit;
}

sim::Circuit diagonalizer(const CommutingGroup& group) {
  std::vector<pauli::PauliString> strings;
  for (const auto& [p, c] : group.members) strings.push_back(p);
  return diagonalizer(strings);
}

bool certify(const CommutingGroup& group, const sim::Circuit& circuit) {
  for (const auto& [p, c] : group.members)
    if (!conjugate(p, circuit).p.is_diagonal()) return false;
  return true;
}

void attach_diagonalizers(std::vector<CommutingGroup>& groups) {
  for (auto& g : groups) {
    if (g.members.empty()) continue;
    auto circuit = diagonalizer(g);
    if (!certify(g, circuit))
      throw std::logic_error("diagonalizer certificate failed");
    g.diagonalizer = std::move(circuit);
  }
}

void attach_diagonalizers(GroupingResult& result) {
  attach_diagonalizers(result.groups);
}

}  // namespace hcbmeas::grouping
