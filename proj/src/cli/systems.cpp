// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/cli/systems.hpp"

#include "hcbmeas/chem/fcidump.hpp"
#include "hcbmeas/chem/sto3g.hpp"
#include "hcbmeas/sim/sampling.hpp"

namespace hcbmeas::cli {

LoadedSystem load_system(const SystemConfig& c) {
  LoadedSystem s;
  if (!c.fcidump.empty()) {
    s.tensors = chem::read_fcidump(c.fcidump);
    s.name = c.fcidump;
    return s;
  }
  chem::Geometry geo = c.xyz.empty()
                           ? chem::build_geometry(c.atoms, c.spacing, c.shape,
                                                  c.geometry_seed)
                           : chem::read_xyz(c.xyz);
  s.tensors = chem::compute_minimal_basis_integrals(geo, c.orbitals);
  s.name = c.xyz.empty() ? "H" + std::to_string(geo.size()) + "-" +
                               chem::to_string(geo.shape)
                         : c.xyz;
  s.geometry = std::move(geo);
  return s;
}

std::vector<std::string> standard_graphs(int n_orb) {
  switch (n_orb) {
    case 2: return {"0-1"};
    case 4: return {"0-1,2-3", "0-3,1-2", "0-2,1-3"};
    case 6:
      return {"0-1,2-3,4-5", "0-5,1-2,3-4", "0-4,1-5,2-3", "0-1,2-4,3-5",
              "0-3,1-4,2-5"};
    case 8:
      return {"0-1,2-3,4-5,6-7", "0-7,1-2,3-4,5-6", "0-3,1-4,2-6,5-7"};
    default:
      throw ConfigError("no standard rotation set for " + std::to_string(n_orb) +
                        " orbitals; list graphs explicitly");
  }
}

std::vector<std::string> standard_ansatz_graphs(int n_orb, chem::Shape shape) {
  const auto g = standard_graphs(n_orb);
  switch (n_orb) {
    case 2: return {g[0]};
    case 4:
      if (shape == chem::Shape::square) return {g[0], g[1], g[0]};
      return {g[0], g[1]};
    case 6:
      if (shape == chem::Shape::ring) return {g[0], g[1], g[2], g[3]};
      return {g[0], g[1], g[2]};
    default: return {g[0], g[1]};
  }
}

std::vector<chem::OrbitalRotation> build_rotations(const RotationConfig& c,
                                                   int n_orb) {
  std::vector<chem::OrbitalRotation> out;
  if (c.include_identity) out.push_back(chem::identity_rotation(n_orb));
  const auto graphs = c.graphs.empty() && !(c.include_identity && c.random_count == 0)
                          ? standard_graphs(n_orb)
                          : c.graphs;
  for (const auto& g : graphs) {
    const auto graph = chem::PairingGraph::parse(g);
    chem::validate(graph, n_orb);
    out.push_back(chem::graph_rotation(graph, c.theta, n_orb));
  }
  for (int i = 0; i < c.random_count; ++i)
    out.push_back(chem::random_orthogonal(
        sim::derive_seed(c.random_seed, static_cast<std::uint64_t>(i)), n_orb));
  return out;
}

}  // namespace hcbmeas::cli
