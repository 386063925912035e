// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "hcbmeas/sim/circuit.hpp"

namespace hcbmeas::grouping {

struct Depth {
  int total = 0;
  int two_qubit = 0;
};

/// ASAP layering by qubit disjointness. Orbital gates (UR, UC) are compiled
/// to elementary gates first. The two-qubit depth layers only CNOT and CZ.
Depth depth_overhead(const sim::Circuit& circuit);

}  // namespace hcbmeas::grouping
