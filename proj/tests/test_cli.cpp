// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hcbmeas/cli/commands.hpp"
#include "hcbmeas/cli/config.hpp"
#include "hcbmeas/cli/systems.hpp"

using namespace hcbmeas;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

cli::ExperimentConfig h4_config(const std::string& dir) {
  return cli::parse_config(json{
      {"system", {{"atoms", 4}, {"spacing", 1.5}, {"shape", "line"}}},
      {"rotations", {{"graphs", {"0-1,2-3", "0-3,1-2", "0-2,1-3"}}}},
      {"repetitions", 10},
      {"output", (fs::path(::testing::TempDir()) / dir).string()}});
}

}  // namespace

TEST(Config, DefaultsAndValidation) {
  const auto c = cli::parse_config(json::object());
  EXPECT_EQ(c.scenario, 1);
  EXPECT_EQ(c.epsilon, 1e-3);
  EXPECT_EQ(c.repetitions, 100);
  EXPECT_THROW(cli::parse_config(json{{"bogus", 1}}), cli::ConfigError);
  EXPECT_THROW(cli::parse_config(json{{"system", {{"atomz", 4}}}}), cli::ConfigError);
  EXPECT_THROW(cli::parse_config(json{{"scenario", "II"}}), cli::ConfigError);
  EXPECT_THROW(cli::parse_config(json{{"scenario", "I"}, {"ansatz", {{"graphs", {"0-1"}}}}}),
               cli::ConfigError);
  EXPECT_THROW(cli::parse_config(json{{"ordering", "zigzag"}}), std::exception);
  const auto round = cli::parse_config(cli::to_json(h4_config("x")));
  EXPECT_EQ(cli::to_json(round).dump(), cli::to_json(h4_config("x")).dump());
}

TEST(Systems, StandardRotationSets) {
  EXPECT_EQ(cli::standard_graphs(4).size(), 3u);
  EXPECT_EQ(cli::standard_graphs(6).size(), 5u);
  cli::RotationConfig rc;
  rc.include_identity = true;
  rc.random_count = 2;
  const auto rs = cli::build_rotations(rc, 4);
  ASSERT_EQ(rs.size(), 6u);
  EXPECT_EQ(rs[0].matrix, Eigen::MatrixXd::Identity(4, 4));
}

TEST(Commands, WriteExpectedArtifactsDeterministically) {
  const auto c = h4_config("cli_a");
  const auto d = h4_config("cli_b");
  const auto ints = cli::cmd_integrals(c);
  EXPECT_EQ(ints["pauli_terms"], 361);
  const auto dec = cli::cmd_decompose(c);
  EXPECT_LT(dec["final_error"].get<double>(), 2e-3);
  const auto groups = cli::cmd_groups(c);
  EXPECT_EQ(groups["protocol"], 9);
  cli::cmd_shots(c);
  cli::cmd_depth(c);
  const auto s1 = cli::cmd_sample(c);
  const auto s2 = cli::cmd_sample(d);
  EXPECT_EQ(s1["SI"].dump(), s2["SI"].dump());
  for (auto name : {"integrals.fcidump", "integrals.json", "protocol.csv", "error_curve.csv",
                    "protocol.json", "groups.csv", "groupings.json", "shots.csv",
                    "sample_si.csv", "sample_protocol.csv", "sample_summary.json", "depth.csv"})
    EXPECT_TRUE(fs::exists(fs::path(c.output) / name)) << name;
  cli::cmd_decompose(d);
  EXPECT_EQ(slurp(fs::path(c.output) / "protocol.csv"), slurp(fs::path(d.output) / "protocol.csv"));
}

TEST(Commands, ExactSamplingHasNoStatisticalError) {
  auto c = h4_config("cli_exact");
  c.exact_sampling = true;
  c.repetitions = 3;
  const auto s = cli::cmd_sample(c);
  EXPECT_LT(std::abs(s["SI"]["mean_error"].get<double>()), 1e-12);
  EXPECT_LT(std::abs(s["protocol"]["mean_error"].get<double>()), 1e-12);
}
