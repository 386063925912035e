// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "hcbmeas/chem/fcidump.hpp"
#include "hcbmeas/cli/systems.hpp"
#include "hcbmeas/grouping/clifford.hpp"
#include "hcbmeas/grouping/coloring.hpp"
#include "hcbmeas/grouping/depth.hpp"
#include "hcbmeas/grouping/serialize.hpp"
#include "hcbmeas/grouping/shots.hpp"
#include "hcbmeas/hcb/protocol.hpp"
#include "hcbmeas/pauli/qubit_hamiltonian.hpp"
#include "hcbmeas/sim/ansatz.hpp"
#include "hcbmeas/sim/eigensolver.hpp"
#include "hcbmeas/sim/rdm.hpp"
#include "hcbmeas/sim/sampling.hpp"

namespace hcbmeas::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path output_dir(const ExperimentConfig& c) {
  fs::path dir(c.output);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

struct Prepared {
  LoadedSystem system;
  pauli::PauliSum hamiltonian;
  sim::GroundState ground;
  sim::Statevector target;
  double target_energy = 0.0;
  std::optional<sim::AnsatzFit> fit;
  std::vector<std::string> ansatz_graphs;
  std::vector<chem::OrbitalRotation> rotations;
};

Prepared prepare(const ExperimentConfig& c, const SystemConfig& system) {
  Prepared p;
  p.system = load_system(system);
  const auto& t = p.system.tensors;
  validate(c, t.n_orb);
  p.hamiltonian = pauli::build_qubit_hamiltonian(t, c.ordering, c.prune);
  p.ground = sim::ground_state(p.hamiltonian, t.n_elec);
  if (c.scenario == 1) {
    p.target = p.ground.state;
  } else {
    sim::PairAnsatz ansatz;
    ansatz.n_orb = t.n_orb;
    ansatz.ordering = c.ordering;
    p.ansatz_graphs = c.ansatz->graphs.empty()
                          ? standard_ansatz_graphs(t.n_orb, system.shape)
                          : c.ansatz->graphs;
    for (const auto& g : p.ansatz_graphs)
      ansatz.graphs.push_back(chem::PairingGraph::parse(g));
    if (ansatz.n_electrons() != t.n_elec)
      throw ConfigError("first ansatz graph must pair every electron");
    sim::AnsatzOptions opts;
    if (!c.ansatz->initial.empty()) {
      if (c.ansatz->initial.size() != ansatz.parameter_count())
        throw ConfigError("ansatz.initial has the wrong length");
      opts.initial = c.ansatz->initial;
    }
    p.fit = sim::optimize_ansatz(t, ansatz, opts);
    p.target = sim::ansatz_state(ansatz, p.fit->params);
  }
  p.target_energy = sim::expectation(p.hamiltonian, p.target);
  p.rotations = build_rotations(c.rotations, t.n_orb);
  return p;
}

Prepared prepare(const ExperimentConfig& c) { return prepare(c, c.system); }

hcb::ProtocolOptions protocol_options(const ExperimentConfig& c) {
  hcb::ProtocolOptions o;
  o.ordering = c.ordering;
  o.max_steps = c.max_steps;
  o.prune_threshold = c.prune;
  return o;
}

std::size_t best_step(const std::vector<hcb::ProtocolRecord>& records) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < records.size(); ++i)
    if (std::abs(records[i].cumulative - records[i].exact) <
        std::abs(records[best].cumulative - records[best].exact))
      best = i;
  return best + 1;
}

json protocol_json(const std::vector<hcb::ProtocolRecord>& records) {
  json steps = json::array();
  for (const auto& r : records) {
    json matrix = json::array();
    for (int i = 0; i < r.rotation.n_orb(); ++i) {
      json row = json::array();
      for (int j = 0; j < r.rotation.n_orb(); ++j) row.push_back(r.rotation.matrix(i, j));
      matrix.push_back(row);
    }
    steps.push_back({{"step", r.step},
                     {"rotation", r.rotation.label},
                     {"matrix", matrix},
                     {"group_sizes", {r.groups[0].size(), r.groups[1].size(), r.groups[2].size()}},
                     {"contributions", r.contributions},
                     {"cumulative", r.cumulative},
                     {"residual_expectation", r.residual_expectation},
                     {"abs_error", std::abs(r.cumulative - r.exact)}});
  }
  return steps;
}

json stats(const std::vector<double>& v) {
  if (v.empty()) return {{"count", 0}};
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  const double sd = v.size() > 1 ? std::sqrt(var / static_cast<double>(v.size() - 1)) : 0.0;
  return {{"count", v.size()}, {"mean", mean}, {"std", sd}};
}

json run_batch(const ExperimentConfig& c) {
  const auto dir = output_dir(c);
  std::string csv =
      "seed,exact,final_error,best_step,best_error,groups,shots,si_groups,si_shots,"
      "accepted\n";
  std::vector<double> g_all, s_all, g_ok, s_ok, si_g, si_s;
  int accepted = 0;
  for (int i = 0; i < c.batch.count; ++i) {
    SystemConfig sys = c.system;
    sys.shape = chem::Shape::random;
    sys.geometry_seed = c.batch.first_seed + static_cast<std::uint64_t>(i);
    ExperimentConfig job = c;
    job.rotations.random_seed = sim::derive_seed(c.rotations.random_seed, *sys.geometry_seed);
    const auto p = prepare(job, sys);
    const auto records = hcb::run_protocol(p.system.tensors, p.rotations, p.target,
                                           protocol_options(job));
    const std::size_t best = best_step(records);
    const std::vector<hcb::ProtocolRecord> head(records.begin(), records.begin() + best);
    const double best_err = std::abs(head.back().cumulative - head.back().exact);
    const double shots =
        hcb::protocol_shots(head, p.target, c.epsilon, c.shot_frame).total;
    const auto si = grouping::si_grouping(p.hamiltonian);
    const double si_shots = grouping::estimate_shots(si, p.target, c.epsilon).total;
    const bool ok = best_err < c.batch.accept_error;
    const double groups = static_cast<double>(hcb::protocol_grouping(head).size());
    g_all.push_back(groups);
    s_all.push_back(shots);
    si_g.push_back(static_cast<double>(si.size()));
    si_s.push_back(si_shots);
    if (ok) {
      ++accepted;
      g_ok.push_back(groups);
      s_ok.push_back(shots);
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "%llu,%.12f,%.6e,%zu,%.6e,%.0f,%.6e,%zu,%.6e,%d\n",
                  static_cast<unsigned long long>(*sys.geometry_seed), head.back().exact,
                  std::abs(records.back().cumulative - records.back().exact), best,
                  best_err, groups, shots, si.size(), si_shots, ok ? 1 : 0);
    csv += buf;
  }
  write_file(dir / "batch.csv", csv);
  json summary{{"command", "decompose"},
               {"mode", "batch"},
               {"count", c.batch.count},
               {"accepted", accepted},
               {"protocol_groups", {{"all", stats(g_all)}, {"accepted", stats(g_ok)}}},
               {"protocol_shots", {{"all", stats(s_all)}, {"accepted", stats(s_ok)}}},
               {"si_groups", stats(si_g)},
               {"si_shots", stats(si_s)}};
  write_file(dir / "batch_summary.json", summary.dump(2) + "\n");
  return summary;
}

}  // namespace

json cmd_integrals(const ExperimentConfig& c) {
  const auto dir = output_dir(c);
  const auto sys = load_system(c.system);
  const auto& t = sys.tensors;
  chem::write_fcidump(t, (dir / "integrals.fcidump").string());
  const auto h = pauli::build_qubit_hamiltonian(t, c.ordering, c.prune);
  json meta{{"command", "integrals"},
            {"system", sys.name},
            {"n_orb", t.n_orb},
            {"n_elec", t.n_elec},
            {"e_nuc", t.e_nuc},
            {"basis", t.basis},
            {"pauli_terms", h.size()},
            {"pauli_terms_without_identity", h.count_without_identity()},
            {"prune", c.prune}};
  if (sys.geometry) meta["geometry_xyz"] = chem::format_xyz(*sys.geometry);
  write_file(dir / "integrals.json", meta.dump(2) + "\n");
  return meta;
}

json cmd_eigen(const ExperimentConfig& c) {
  const auto dir = output_dir(c);
  const auto sys = load_system(c.system);
  const auto h = pauli::build_qubit_hamiltonian(sys.tensors, c.ordering, c.prune);
  const auto gs = sim::ground_state(h, sys.tensors.n_elec);
  json out{{"command", "eigen"},
           {"system", sys.name},
           {"n_elec", sys.tensors.n_elec},
           {"energy", gs.energy},
           {"residual", gs.residual},
           {"method", gs.method},
           {"rdm_energy", sim::tensor_expectation(sys.tensors, gs.state, c.ordering)}};
  write_file(dir / "eigen.json", out.dump(2) + "\n");
  return out;
}

json cmd_decompose(const ExperimentConfig& c) {
  if (c.batch.count > 0) return run_batch(c);
  const auto dir = output_dir(c);
  const auto p = prepare(c);
  const auto records = hcb::run_protocol(p.system.tensors, p.rotations, p.target,
                                         protocol_options(c));
  write_file(dir / "protocol.csv", hcb::protocol_csv(records));
  std::string curve = "step,abs_error\n";
  for (const auto& e : hcb::protocol_error_curve(records, p.target_energy))
    curve += std::to_string(e.step) + "," + fmt("%.12e", e.error) + "\n";
  write_file(dir / "error_curve.csv", curve);
  const std::size_t best = best_step(records);
  json out{{"command", "decompose"},
           {"system", p.system.name},
           {"scenario", c.scenario == 1 ? "I" : "II"},
           {"ground_energy", p.ground.energy},
           {"target_energy", p.target_energy},
           {"steps", records.size()},
           {"final_error", std::abs(records.back().cumulative - p.target_energy)},
           {"best_step", best},
           {"best_error", std::abs(records[best - 1].cumulative - p.target_energy)},
           {"records", protocol_json(records)}};
  if (p.fit) {
    out["ansatz_graphs"] = p.ansatz_graphs;
    out["ansatz_parameters"] = p.fit->params;
  }
  write_file(dir / "protocol.json", out.dump(2) + "\n");
  out.erase("records");
  return out;
}

json cmd_groups(const ExperimentConfig& c) {
  const auto dir = output_dir(c);
  const auto p = prepare(c);
  const auto& h = p.hamiltonian;
  const auto lf = grouping::lf_grouping(h, c.grouping_mode);
  const auto rlf = grouping::rlf_grouping(h, c.grouping_mode);
  const auto si = grouping::si_grouping(h);
  const auto records = hcb::run_protocol(p.system.tensors, p.rotations, p.target,
                                         protocol_options(c));
  const std::size_t best = best_step(records);
  const std::vector<hcb::ProtocolRecord> head(records.begin(), records.begin() + best);
  const auto protocol = hcb::protocol_grouping(records);
  const auto protocol_best = hcb::protocol_grouping(head);
  const std::string mode = pauli::to_string(c.grouping_mode);

  std::string csv = "method,mode,groups\n";
  csv += "Original,-," + std::to_string(h.size()) + "\n";
  csv += "Original-without-identity,-," + std::to_string(h.count_without_identity()) + "\n";
  csv += "LF," + mode + "," + std::to_string(lf.size()) + "\n";
  csv += "RLF," + mode + "," + std::to_string(rlf.size()) + "\n";
  csv += "SI,fully," + std::to_string(si.size()) + "\n";
  csv += "HCB-protocol,fully," + std::to_string(protocol.size()) + "\n";
  csv += "HCB-protocol-best-step,fully," + std::to_string(protocol_best.size()) + "\n";
  write_file(dir / "groups.csv", csv);
  write_file(dir / "groupings.json",
             json{{"LF", grouping::to_json(lf)},
                  {"RLF", grouping::to_json(rlf)},
                  {"SI", grouping::to_json(si)},
                  {"HCB-protocol", grouping::to_json(protocol)}}
                     .dump(1) +
                 "\n");
  return {{"command", "groups"},
          {"system", p.system.name},
          {"terms", h.size()},
          {"terms_without_identity", h.count_without_identity()},
          {"LF", lf.size()},
          {"RLF", rlf.size()},
          {"SI", si.size()},
          {"protocol", protocol.size()},
          {"protocol_best_step", protocol_best.size()},
          {"best_step", best}};
}

json cmd_shots(const ExperimentConfig& c) {
  const auto dir = output_dir(c);
  const auto p = prepare(c);
  const auto& h = p.hamiltonian;
  const double eps = c.epsilon;
  const double lf = grouping::estimate_shots(grouping::lf_grouping(h, c.grouping_mode), p.target, eps).total;
  const double rlf = grouping::estimate_shots(grouping::rlf_grouping(h, c.grouping_mode), p.target, eps).total;
  const double si = grouping::estimate_shots(grouping::si_grouping(h), p.target, eps).total;
  const auto records = hcb::run_protocol(p.system.tensors, p.rotations, p.target,
                                         protocol_options(c));
  const double target = hcb::protocol_shots(records, p.target, eps, hcb::ShotFrame::target).total;
  const double measured = hcb::protocol_shots(records, p.target, eps, hcb::ShotFrame::measured).total;
  const std::string scen = c.scenario == 1 ? "Scenario I" : "Scenario II";
  std::string csv = "method,shots,shots_e4\n";
  auto row = [&](const std::string& name, double v) {
    csv += name + "," + fmt("%.6e", v) + "," + fmt("%.4f", v / 1e4) + "\n";
  };
  row("LF", lf);
  row("RLF", rlf);
  row("SI", si);
  row(scen + " (target frame)", target);
  row(scen + " (measured frame)", measured);
  write_file(dir / "shots.csv", csv);
  return {{"command", "shots"},
          {"system", p.system.name},
          {"epsilon", eps},
          {"LF", lf},
          {"RLF", rlf},
          {"SI", si},
          {"protocol", c.shot_frame == hcb::ShotFrame::target ? target : measured},
          {"protocol_target_frame", target},
          {"protocol_measured_frame", measured}};
}

json cmd_sample(const ExperimentConfig& c) {
  const auto dir = output_dir(c);
  const auto p = prepare(c);
  const double eps = c.epsilon;

  auto si = grouping::si_grouping(p.hamiltonian);
  grouping::attach_diagonalizers(si);
  const auto si_est = grouping::estimate_shots(si, p.target, eps);
  std::vector<sim::MeasurementJob> si_jobs;
  for (std::size_t i = 0; i < si.groups.size(); ++i)
    si_jobs.push_back({&si.groups[i], &p.target,
                       c.exact_sampling ? 0 : sim::shots_from_estimate(si_est.per_group[i])});
  const auto si_run = sim::finite_sample_experiment(si_jobs, c.repetitions,
                                                    sim::derive_seed(c.seed, 1));

  auto records = hcb::run_protocol(p.system.tensors, p.rotations, p.target,
                                   protocol_options(c));
  std::vector<grouping::CommutingGroup> groups;
  std::vector<const sim::Statevector*> frames;
  for (const auto& r : records)
    for (const auto& g : r.groups)
      if (!g.members.empty()) {
        groups.push_back(g);
        frames.push_back(&r.measured_state);
      }
  grouping::attach_diagonalizers(groups);
  const auto pr_est = hcb::protocol_shots(records, p.target, eps, c.shot_frame);
  if (pr_est.per_group.size() != groups.size())
    throw std::logic_error("protocol shot estimate does not match its groups");
  std::vector<sim::MeasurementJob> pr_jobs;
  for (std::size_t i = 0; i < groups.size(); ++i)
    pr_jobs.push_back({&groups[i], frames[i],
                       c.exact_sampling ? 0 : sim::shots_from_estimate(pr_est.per_group[i])});
  const auto pr_run = sim::finite_sample_experiment(pr_jobs, c.repetitions,
                                                    sim::derive_seed(c.seed, 2));

  write_file(dir / "sample_si.csv", sim::experiment_csv(si_run));
  write_file(dir / "sample_protocol.csv", sim::experiment_csv(pr_run));
  auto summary = [](const sim::ExperimentResult& r) {
    return json{{"reference", r.reference},
                {"mean_error", r.mean_error},
                {"std", r.stddev},
                {"mean_abs_error", r.mean_abs_error},
                {"abs_mean_error", r.abs_mean_error},
                {"shots_per_repetition", r.shots_per_repetition}};
  };
  json out{{"command", "sample"},
           {"system", p.system.name},
           {"epsilon", eps},
           {"repetitions", c.repetitions},
           {"seed", c.seed},
           {"exact_sampling", c.exact_sampling},
           {"SI", summary(si_run)},
           {"protocol", summary(pr_run)}};
  write_file(dir / "sample_summary.json", out.dump(2) + "\n");
  return out;
}

json cmd_depth(const ExperimentConfig& c) {
  const auto dir = output_dir(c);
  int n_orb = 0;
  if (!c.system.fcidump.empty()) {
    n_orb = chem::read_fcidump(c.system.fcidump).n_orb;
  } else if (!c.system.xyz.empty()) {
    n_orb = static_cast<int>(chem::read_xyz(c.system.xyz).size());
  } else {
    n_orb = c.system.atoms;
  }
  validate(c, n_orb);
  const auto rotations = build_rotations(c.rotations, n_orb);
  std::string csv = "rotation,interleaved_depth,interleaved_2q_depth,reordered_depth,reordered_2q_depth\n";
  json rows = json::array();
  for (const auto& r : rotations) {
    const auto di = grouping::depth_overhead(
        sim::rotation_circuit(r, pauli::QubitOrdering::interleaved));
    const auto dr = grouping::depth_overhead(
        sim::rotation_circuit(r, pauli::QubitOrdering::reordered));
    csv += "\"" + r.label + "\"," + std::to_string(di.total) + "," +
           std::to_string(di.two_qubit) + "," + std::to_string(dr.total) + "," +
           std::to_string(dr.two_qubit) + "\n";
    rows.push_back({{"rotation", r.label},
                    {"interleaved", {di.total, di.two_qubit}},
                    {"reordered", {dr.total, dr.two_qubit}}});
  }
  write_file(dir / "depth.csv", csv);
  return {{"command", "depth"}, {"n_orb", n_orb}, {"rotations", rows}};
}

}  // namespace hcbmeas::cli
