// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <tuple>
#include <utility>
#include <vector>

#include "hcbmeas/chem/integral_tensors.hpp"
#include "hcbmeas/chem/rotation.hpp"
#include "hcbmeas/grouping/commuting_group.hpp"
#include "hcbmeas/pauli/jordan_wigner.hpp"

namespace hcbmeas::hcb {

struct PairTerm {
  int k = 0;
  int l = 0;
  double coefficient = 0.0;
};

/**
 * Paired-electron (hard-core boson) part of an integral Hamiltonian.
 *
 * Coefficients are operator weights:
 *   alpha_k   h_kk                    sum_s   n_ks
 *   beta_kl   g_kkll / 2  (k != l)    sum_st  a+_ks a+_kt a_lt a_ls
 *   gamma_kl  g_kllk / 2              sum_st  a+_ks a+_lt a_kt a_ls
 *   delta_kl  g_klkl / 2  (k != l)    sum_st  a+_ks a+_lt a_lt a_ks
 * where index positions follow IntegralTensors (g_klmn weights
 * a+_k a+_l a_n a_m). The on-site g_kkkk lives in gamma only.
 */
struct HCBDecomposition {
  std::vector<std::pair<int, double>> alpha;
  std::vector<PairTerm> beta;
  std::vector<PairTerm> gamma;
  std::vector<PairTerm> delta;
  double e_nuc = 0.0;                // identity weight carried by this part
  chem::IntegralTensors hcb;         // only the consumed entries
  chem::IntegralTensors residual;    // input with those entries zeroed
  chem::OrbitalRotation basis;       // reference -> current basis

  int n_orb() const { return hcb.n_orb; }
};

/// True when g_klmn has one of the patterns (k,k,l,l), (k,l,l,k), (k,l,k,l).
bool is_hcb_entry(int k, int l, int m, int n);

/// Splits `t` into HCB and residual parts. e_nuc moves to the HCB part.
HCBDecomposition extract_hcb(const chem::IntegralTensors& t,
                             chem::OrbitalRotation basis = {});

/// hcb + residual, entrywise.
chem::IntegralTensors reconstruct(const HCBDecomposition& d);

/// Diagonal strings, then the two pair-exchange families, each internally
/// fully commuting. Throws std::logic_error if a family fails that check.
std::array<grouping::CommutingGroup, 3> hcb_to_groups(
    const HCBDecomposition& d,
    pauli::QubitOrdering ordering = pauli::QubitOrdering::interleaved,
    double prune_threshold = pauli::kDefaultPrune);

}  // namespace hcbmeas::hcb
