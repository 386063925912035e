// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/grouping/depth.hpp"

#include <algorithm>
#include <vector>

#include "hcbmeas/sim/compile.hpp"

namespace hcbmeas::grouping {

Depth depth_overhead(const sim::Circuit& input) {
  const sim::Circuit circuit = sim::compile_elementary(input);
  std::vector<int> level(circuit.n_qubits(), 0), level2(circuit.n_qubits(), 0);
  Depth d;
  for (const auto& g : circuit.gates()) {
    if (sim::is_two_qubit(g.kind)) {
      const int l = std::max(level[g.a], level[g.b]) + 1;
      level[g.a] = level[g.b] = l;
      const int l2 = std::max(level2[g.a], level2[g.b]) + 1;
      level2[g.a] = level2[g.b] = l2;
      d.two_qubit = std::max(d.two_qubit, l2);
      d.total = std::max(d.total, l);
    } else {
      d.total = std::max(d.total, ++level[g.a]);
    }
  }
  return d;
}

}  // namespace hcbmeas::grouping
