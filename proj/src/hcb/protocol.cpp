// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/hcb/protocol.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hcbmeas/sim/circuit.hpp"
#include "hcbmeas/sim/rdm.hpp"

namespace hcbmeas::hcb {

std::vector<ProtocolRecord> run_protocol(
    const chem::IntegralTensors& tensors,
    const std::vector<chem::OrbitalRotation>& rotations,
    const sim::Statevector& state, const ProtocolOptions& options) {
  const int N = tensors.n_orb;
  if (rotations.empty()) throw std::invalid_argument("no rotations given");
  if (state.n_qubits() != 2 * N)
    throw std::invalid_argument("state width does not match 2N qubits");
  for (const auto& r : rotations) {
    if (r.n_orb() != N)
      throw std::invalid_argument("rotation dimension does not match tensors");
    if (chem::orthogonality_error(r.matrix) > 1e-10)
      throw std::invalid_argument("rotation '" + r.label + "' is not orthogonal");
  }

  const double exact = sim::tensor_expectation(tensors, state, options.ordering);
  const std::size_t steps =
      options.max_steps < 0
          ? rotations.size()
          : std::min(rotations.size(), static_cast<std::size_t>(options.max_steps));

  std::vector<ProtocolRecord> records;
  chem::IntegralTensors residual = tensors;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const auto& rot = rotations[k];
    const auto d = extract_hcb(chem::rotate_integrals(residual, rot), rot);

    ProtocolRecord rec;
    rec.step = static_cast<int>(k + 1);
    rec.rotation = rot;
    rec.groups = hcb_to_groups(d, options.ordering, options.prune_threshold);
    rec.measured_state =
        sim::apply(sim::rotation_circuit(rot, options.ordering), state);
    for (int g = 0; g < 3; ++g) {
      rec.contributions[g] =
          rec.groups[g].members.empty()
              ? 0.0
              : sim::expectation(rec.groups[g].to_sum(), rec.measured_state);
      rec.step_contribution += rec.contributions[g];
    }
    residual = chem::rotate_integrals(d.residual, rot.transpose());
    cumulative += rec.step_contribution;
    rec.cumulative = cumulative;
    rec.residual_expectation =
        sim::tensor_expectation(residual, state, options.ordering);
    rec.exact = exact;
    if (std::abs(rec.cumulative + rec.residual_expectation - exact) >
        options.identity_tolerance)
      throw std::logic_error("protocol bookkeeping drifted at step " +
                             std::to_string(rec.step));
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ErrorPoint> protocol_error_curve(
    const std::vector<ProtocolRecord>& records, double exact) {
  std::vector<ErrorPoint> curve{{0, std::abs(exact)}};
  for (const auto& r : records)
    curve.push_back({r.step, std::abs(r.cumulative - exact)});
  return curve;
}

std::string protocol_csv(const std::vector<ProtocolRecord>& records) {
  std::string out =
      "step,rotation,group1,group2,group3,cumulative,residual_expectation,"
      "abs_error\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%d,\"%s\",%.12e,%.12e,%.12e,%.12e,%.12e,%.6e\n",
                  r.step, r.rotation.label.c_str(), r.contributions[0],
                  r.contributions[1], r.contributions[2], r.cumulative,
                  r.residual_expectation, std::abs(r.cumulative - r.exact));
    out += buf;
  }
  return out;
}

grouping::GroupingResult protocol_grouping(
    const std::vector<ProtocolRecord>& records) {
  grouping::GroupingResult result{{}, "HCB-protocol", pauli::Commutation::fully};
  for (const auto& r : records)
    for (const auto& g : r.groups)
      if (!g.members.empty()) result.groups.push_back(g);
  return result;
}

std::string to_string(ShotFrame frame) {
  return frame == ShotFrame::target ? "target" : "measured";
}

ShotFrame parse_shot_frame(std::string_view text) {
  if (text == "target") return ShotFrame::target;
  if (text == "measured") return ShotFrame::measured;
  throw std::invalid_argument("unknown shot frame '" + std::string(text) + "'");
}

grouping::ShotEstimate protocol_shots(const std::vector<ProtocolRecord>& records,
                                      const sim::Statevector& target,
                                      double epsilon, ShotFrame frame) {
  std::vector<grouping::CommutingGroup> groups;
  std::vector<const sim::Statevector*> states;
  for (const auto& r : records)
    for (const auto& g : r.groups) {
      if (g.members.empty()) continue;
      groups.push_back(g);
      states.push_back(frame == ShotFrame::target ? &target : &r.measured_state);
    }
  return grouping::estimate_shots(groups, states, epsilon);
}

}  // namespace hcbmeas::hcb
