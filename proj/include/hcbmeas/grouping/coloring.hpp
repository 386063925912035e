// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hcbmeas/grouping/commuting_group.hpp"

namespace hcbmeas::grouping {

/// Largest First: greedy coloring of the non-commutation graph, vertices
/// visited by decreasing degree. Ties keep the canonical (x, z) order.
GroupingResult lf_grouping(const pauli::PauliSum& sum,
                           pauli::Commutation mode = pauli::Commutation::fully);

/// Recursive Largest First. Each color class starts from the uncolored
/// vertex of largest remaining degree and grows by the candidate with most
/// neighbours among excluded vertices, then fewest among candidates.
GroupingResult rlf_grouping(const pauli::PauliSum& sum,
                            pauli::Commutation mode = pauli::Commutation::fully);

/// Sorted Insertion: terms by decreasing |c|, each placed in the first group
/// it commutes with entirely.
GroupingResult si_grouping(const pauli::PauliSum& sum,
                           pauli::Commutation mode = pauli::Commutation::fully);

}  // namespace hcbmeas::grouping
