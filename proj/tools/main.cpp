// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hcbmeas/cli/commands.hpp"
#include "hcbmeas/cli/config.hpp"

namespace {

using Command = std::function<nlohmann::json(const hcbmeas::cli::ExperimentConfig&)>;

const std::map<std::string, Command>& commands() {
  namespace c = hcbmeas::cli;
  static const std::map<std::string, Command> table{
      {"integrals", c::cmd_integrals}, {"eigen", c::cmd_eigen},
      {"decompose", c::cmd_decompose}, {"groups", c::cmd_groups},
      {"shots", c::cmd_shots},         {"sample", c::cmd_sample},
      {"depth", c::cmd_depth},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hard-core boson measurement reduction for molecular Hamiltonians"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out;
  std::string ordering;
  std::uint64_t seed = 0;

  for (const auto& [name, fn] : commands()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " stage");
    sub->add_option("-c,--config", config_path, "experiment config (JSON)")->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "override the sampling seed");
    sub->add_option("-o,--out", out, "override the output directory");
    sub->add_option("--ordering", ordering, "interleaved or reordered")
        ->check(CLI::IsMember({"interleaved", "reordered"}));
  }

  CLI11_PARSE(app, argc, argv);

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    auto config = hcbmeas::cli::load_config(config_path);
    if (!out.empty()) config.output = out;
    if (app.get_subcommands().front()->count("--seed") > 0) config.seed = seed;
    if (!ordering.empty()) config.ordering = hcbmeas::pauli::parse_ordering(ordering);
    const auto summary = commands().at(verb)(config);
    std::cout << summary.dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    nlohmann::json err{{"command", verb}, {"error", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
