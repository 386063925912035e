// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/sim/rdm.hpp"

#include <bit>
#include <stdexcept>

namespace hcbmeas::sim {

namespace {

// Sign of removing (or adding) the fermion at `mode` given the current bits.
inline int jw_sign(std::uint64_t bits, int mode) {
  return (std::popcount(bits & ((1ULL << mode) - 1)) & 1) ? -1 : 1;
}

}  // namespace

SpinSummedRdm compute_rdm(const Statevector& psi, int n_orb,
                          pauli::QubitOrdering ordering) {
  if (psi.n_qubits() != 2 * n_orb)
    throw std::invalid_argument("state width does not match orbital count");
  const int nq = 2 * n_orb;
  std::vector<int> orb(nq), spin(nq);
  for (int k = 0; k < n_orb; ++k)
    for (int s = 0; s < 2; ++s) {
      const int q = pauli::spin_orbital(k, s, n_orb, ordering);
      orb[q] = k;
      spin[q] = s;
    }
  SpinSummedRdm r;
  r.n_orb = n_orb;
  r.d1 = Eigen::MatrixXd::Zero(n_orb, n_orb);
  const auto N = static_cast<std::size_t>(n_orb);
  r.d2.assign(N * N * N * N, 0.0);
  auto idx = [N](int k, int l, int m, int n) {
    return ((k * N + l) * N + m) * N + n;
  };

  const auto& a = psi.amplitudes();
  for (std::uint64_t b = 0; b < psi.dim(); ++b) {
    const complex cb = a[static_cast<Eigen::Index>(b)];
    if (cb == 0.0) continue;
    r.norm2 += std::norm(cb);
    for (int M = 0; M < nq; ++M) {
      if (!((b >> M) & 1)) continue;
      const std::uint64_t b1 = b ^ (1ULL << M);
      const int s1 = jw_sign(b, M);
      // one-body: a+_K a_M with spin(K) = spin(M)
      for (int K = 0; K < nq; ++K) {
        if (spin[K] != spin[M] || ((b1 >> K) & 1)) continue;
        const std::uint64_t b2 = b1 | (1ULL << K);
        const int s = s1 * jw_sign(b1, K);
        r.d1(orb[K], orb[M]) +=
            s * (std::conj(a[static_cast<Eigen::Index>(b2)]) * cb).real();
      }
      // two-body: a+_K a+_L a_N a_M, N acts after M
      for (int Nm = 0; Nm < nq; ++Nm) {
        if (Nm == M || !((b1 >> Nm) & 1)) continue;
        const std::uint64_t b2 = b1 ^ (1ULL << Nm);
        const int s2 = s1 * jw_sign(b1, Nm);
        for (int L = 0; L < nq; ++L) {
          if (spin[L] != spin[Nm] || ((b2 >> L) & 1)) continue;
          const std::uint64_t b3 = b2 | (1ULL << L);
          const int s3 = s2 * jw_sign(b2, L);
          for (int K = 0; K < nq; ++K) {
            if (spin[K] != spin[M] || ((b3 >> K) & 1)) continue;
            const std::uint64_t b4 = b3 | (1ULL << K);
            const int s4 = s3 * jw_sign(b3, K);
            r.d2[idx(orb[K], orb[L], orb[M], orb[Nm])] +=
                s4 * (std::conj(a[static_cast<Eigen::Index>(b4)]) * cb).real();
          }
        }
      }
    }
  }
  return r;
}

double energy_from_rdm(const chem::IntegralTensors& t, const SpinSummedRdm& r) {
  if (t.n_orb != r.n_orb)
    throw std::invalid_argument("RDM and tensors have different orbital counts");
  double e = t.e_nuc * r.norm2;
  for (int k = 0; k < t.n_orb; ++k)
    for (int l = 0; l < t.n_orb; ++l) e += t.h(k, l) * r.d1(k, l);
  double two = 0.0;
  for (std::size_t i = 0; i < t.g.size(); ++i) two += t.g[i] * r.d2[i];
  return e + 0.5 * two;
}

double tensor_expectation(const chem::IntegralTensors& t, const Statevector& psi,
                          pauli::QubitOrdering ordering) {
  return energy_from_rdm(t, compute_rdm(psi, t.n_orb, ordering));
}

}  // namespace hcbmeas::sim
