// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/sim/statevector.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcbmeas::sim {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxStatevectorQubits)
    throw std::invalid_argument("statevector supports 1.." +
                                std::to_string(kMaxStatevectorQubits) +
                                " qubits, got " + std::to_string(n));
}

void check_match(int a, int b) {
  if (a != b) throw std::invalid_argument("qubit count mismatch");
}

// i^k for k mod 4
complex ipow(int k) { return pauli::i_power(k); }

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  amps_[0] = 1.0;
}

Statevector Statevector::basis(int n_qubits, std::uint64_t bits) {
  Statevector s(n_qubits);
  if (bits >= s.dim()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[static_cast<Eigen::Index>(bits)] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(int n_qubits, Eigen::VectorXcd amps) {
  check_qubits(n_qubits);
  if (amps.size() != (Eigen::Index{1} << n_qubits))
    throw std::invalid_argument("amplitude count does not match qubits");
  if (std::abs(amps.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("statevector is not normalized");
  Statevector s;
  s.n_qubits_ = n_qubits;
  s.amps_ = std::move(amps);
  return s;
}

void Statevector::normalize() {
  const double n = amps_.norm();
  if (n == 0.0) throw std::domain_error("cannot normalize a zero vector");
  amps_ /= n;
}

complex inner(const Statevector& a, const Statevector& b) {
  check_match(a.n_qubits(), b.n_qubits());
  return a.amplitudes().dot(b.amplitudes());
}

Statevector apply_pauli(const pauli::PauliString& p, const Statevector& psi) {
  check_match(p.n_qubits, psi.n_qubits());
  Eigen::VectorXcd out(psi.amplitudes().size());
  const complex base = ipow(std::popcount(p.x & p.z));
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    const double sign = (std::popcount(b & p.z) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(b ^ p.x)] = base * sign * psi[b];
  }
  Statevector s = psi;
  s.mutable_amplitudes() = std::move(out);
  return s;
}

complex pauli_expectation_complex(const pauli::PauliString& p,
                                  const Statevector& psi) {
  check_match(p.n_qubits, psi.n_qubits());
  const auto& a = psi.amplitudes();
  complex acc = 0.0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    const complex v = std::conj(a[static_cast<Eigen::Index>(b ^ p.x)]) *
                      a[static_cast<Eigen::Index>(b)];
    acc += (std::popcount(b & p.z) & 1) ? -v : v;
  }
  return acc * ipow(std::popcount(p.x & p.z));
}

double pauli_expectation(const pauli::PauliString& p, const Statevector& psi) {
  const complex v = pauli_expectation_complex(p, psi);
  if (std::abs(v.imag()) > 1e-10)
    throw std::logic_error("Pauli expectation is not real");
  return v.real();
}

double expectation(const pauli::PauliSum& op, const Statevector& psi) {
  check_match(op.n_qubits(), psi.n_qubits());
  // Terms sharing an x mask map b to the same partner b ^ x.
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, complex>>> by_x;
  for (const auto& [p, c] : op)
    by_x[p.x].emplace_back(p.z, c * ipow(std::popcount(p.x & p.z)));
  const auto& a = psi.amplitudes();
  complex total = 0.0;
  for (const auto& [x, zs] : by_x) {
    for (std::uint64_t b = 0; b < psi.dim(); ++b) {
      const complex amp = a[static_cast<Eigen::Index>(b)];
      if (amp == 0.0) continue;
      complex diag = 0.0;
      for (const auto& [z, w] : zs)
        diag += (std::popcount(b & z) & 1) ? -w : w;
      total += std::conj(a[static_cast<Eigen::Index>(b ^ x)]) * diag * amp;
    }
  }
  if (std::abs(total.imag()) > 1e-10)
    throw std::logic_error("expectation of a Hermitian operator is not real");
  return total.real();
}

double number_expectation(const Statevector& psi) {
  double n = 0.0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b)
    n += std::norm(psi[b]) * std::popcount(b);
  return n;
}

double leakage_outside_sector(const Statevector& psi, int weight) {
  double worst = 0.0;
  for (std::uint64_t b = 0; b < psi.dim(); ++b)
    if (std::popcount(b) != weight) worst = std::max(worst, std::norm(psi[b]));
  return worst;
}

}  // namespace hcbmeas::sim
