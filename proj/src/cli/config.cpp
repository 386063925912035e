// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hcbmeas/chem/rotation.hpp"

namespace hcbmeas::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw ConfigError("unknown key '" + key + "' in " + where);
}

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

SystemConfig parse_system(const json& j) {
  reject_unknown(j, {"atoms", "spacing", "shape", "seed", "xyz", "fcidump", "orbitals"},
                 "system");
  SystemConfig s;
  read(j, "atoms", s.atoms);
  read(j, "spacing", s.spacing);
  std::string shape = chem::to_string(s.shape);
  read(j, "shape", shape);
  s.shape = chem::parse_shape(shape);
  if (j.contains("seed") && !j.at("seed").is_null())
    s.geometry_seed = j.at("seed").get<std::uint64_t>();
  read(j, "xyz", s.xyz);
  read(j, "fcidump", s.fcidump);
  std::string orbitals = "lowdin";
  read(j, "orbitals", orbitals);
  if (orbitals == "lowdin") s.orbitals = chem::OrbitalMode::lowdin;
  else if (orbitals == "hartree_fock" || orbitals == "hf")
    s.orbitals = chem::OrbitalMode::hartree_fock;
  else throw ConfigError("unknown orbital mode '" + orbitals + "'");
  if (!s.xyz.empty() && !s.fcidump.empty())
    throw ConfigError("system may name either xyz or fcidump, not both");
  return s;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  reject_unknown(j,
                 {"system", "ordering", "scenario", "rotations", "ansatz", "batch",
                  "epsilon", "repetitions", "seed", "prune", "max_steps",
                  "shot_frame", "exact_sampling", "grouping_mode", "output"},
                 "config");
  ExperimentConfig c;
  if (j.contains("system")) c.system = parse_system(j.at("system"));
  std::string ordering = "interleaved";
  read(j, "ordering", ordering);
  c.ordering = pauli::parse_ordering(ordering);

  if (j.contains("scenario")) {
    const auto& s = j.at("scenario");
    const std::string tag = s.is_string() ? s.get<std::string>()
                                          : std::to_string(s.get<int>());
    if (tag == "I" || tag == "1") c.scenario = 1;
    else if (tag == "II" || tag == "2") c.scenario = 2;
    else throw ConfigError("scenario must be I or II");
  }
  if (j.contains("rotations")) {
    const auto& r = j.at("rotations");
    reject_unknown(r, {"graphs", "theta", "include_identity", "random_count", "random_seed"},
                   "rotations");
    read(r, "graphs", c.rotations.graphs);
    read(r, "theta", c.rotations.theta);
    read(r, "include_identity", c.rotations.include_identity);
    read(r, "random_count", c.rotations.random_count);
    read(r, "random_seed", c.rotations.random_seed);
    if (c.rotations.random_count < 0) throw ConfigError("random_count < 0");
  }
  if (j.contains("ansatz") && !j.at("ansatz").is_null()) {
    const auto& a = j.at("ansatz");
    reject_unknown(a, {"graphs", "initial"}, "ansatz");
    AnsatzConfig ac;
    read(a, "graphs", ac.graphs);
    read(a, "initial", ac.initial);
    c.ansatz = std::move(ac);
  }
  if (j.contains("batch")) {
    const auto& b = j.at("batch");
    reject_unknown(b, {"count", "first_seed", "accept_error"}, "batch");
    read(b, "count", c.batch.count);
    read(b, "first_seed", c.batch.first_seed);
    read(b, "accept_error", c.batch.accept_error);
  }
  read(j, "epsilon", c.epsilon);
  read(j, "repetitions", c.repetitions);
  read(j, "seed", c.seed);
  read(j, "prune", c.prune);
  read(j, "max_steps", c.max_steps);
  std::string frame = "target";
  read(j, "shot_frame", frame);
  c.shot_frame = hcb::parse_shot_frame(frame);
  read(j, "exact_sampling", c.exact_sampling);
  std::string mode = "fully";
  read(j, "grouping_mode", mode);
  c.grouping_mode = pauli::parse_commutation(mode);
  read(j, "output", c.output);

  if (!(c.epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (c.repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (c.prune < 0.0) throw ConfigError("prune must be non-negative");
  if (c.scenario == 2 && !c.ansatz)
    throw ConfigError("scenario II requires an ansatz section");
  if (c.scenario == 1 && c.ansatz)
    throw ConfigError("scenario I does not take an ansatz section");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

nlohmann::json to_json(const ExperimentConfig& c) {
  json system{{"orbitals", c.system.orbitals == chem::OrbitalMode::lowdin
                               ? "lowdin"
                               : "hartree_fock"}};
  if (!c.system.fcidump.empty()) {
    system["fcidump"] = c.system.fcidump;
  } else if (!c.system.xyz.empty()) {
    system["xyz"] = c.system.xyz;
  } else {
    system["atoms"] = c.system.atoms;
    system["spacing"] = c.system.spacing;
    system["shape"] = chem::to_string(c.system.shape);
    if (c.system.geometry_seed) system["seed"] = *c.system.geometry_seed;
  }
  json out{{"system", system},
           {"ordering", pauli::to_string(c.ordering)},
           {"scenario", c.scenario == 1 ? "I" : "II"},
           {"rotations",
            {{"graphs", c.rotations.graphs},
             {"theta", c.rotations.theta},
             {"include_identity", c.rotations.include_identity},
             {"random_count", c.rotations.random_count},
             {"random_seed", c.rotations.random_seed}}},
           {"epsilon", c.epsilon},
           {"repetitions", c.repetitions},
           {"seed", c.seed},
           {"prune", c.prune},
           {"max_steps", c.max_steps},
           {"shot_frame", hcb::to_string(c.shot_frame)},
           {"exact_sampling", c.exact_sampling},
           {"grouping_mode", pauli::to_string(c.grouping_mode)},
           {"output", c.output}};
  if (c.ansatz)
    out["ansatz"] = {{"graphs", c.ansatz->graphs}, {"initial", c.ansatz->initial}};
  if (c.batch.count > 0)
    out["batch"] = {{"count", c.batch.count},
                    {"first_seed", c.batch.first_seed},
                    {"accept_error", c.batch.accept_error}};
  return out;
}

void validate(const ExperimentConfig& c, int n_orb) {
  auto check = [&](const std::string& g, const char* where) {
    try {
      chem::validate(chem::PairingGraph::parse(g), n_orb);
    } catch (const std::exception& e) {
      throw ConfigError(std::string(where) + " graph '" + g + "': " + e.what());
    }
  };
  for (const auto& g : c.rotations.graphs) check(g, "rotation");
  if (c.ansatz) {
    for (const auto& g : c.ansatz->graphs) check(g, "ansatz");
    if (c.ansatz->graphs.empty()) throw ConfigError("ansatz needs graphs");
  }
}

}  // namespace hcbmeas::cli
