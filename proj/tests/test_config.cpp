// Copyright 2026 csrskit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "csrs/config.hpp"
#include "csrs/csv.hpp"
#include "csrs/error.hpp"
#include "test_support.hpp"

namespace csrs {
namespace {

const char* kMinimal = R"(
fiber:
  core_radius_um: 23
  wall_thickness_um: 1.28
  num_capillaries: 7
gas:
  sellmeier: [[1.6487e-4, 5.5340e-3], [1.0660e-4, 1.0870e-2]]
  reference_pressure_bar: 1.01325
  reference_temperature_k: 273.15
scheme:
  pump1_nm: 1550
  pump2_nm: 942
  probe_nm: 914
  raman_shift_cm1: 4155.25
  detuning_tolerance_cm1: 10
)";

std::string config_error(const std::string& yaml) {
  try {
    parse_config(yaml);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Config) << e.what();
    return e.what();
  }
  return "no error";
}

TEST(Config, MinimalDerivesCapillaryRadius) {
  const auto cfg = parse_config(kMinimal);
  EXPECT_TRUE(cfg.capillary_radius_derived);
  EXPECT_NEAR(cfg.setup.geometry.capillary_inner_radius_um, 17.6277, 1e-4);
  EXPECT_EQ(cfg.setup.index.model, IndexModel::Zeisberger);
  EXPECT_EQ(cfg.fields.probe.wavelength_nm, 914.0);
  EXPECT_NEAR(cfg.scheme().signal_nm, 1475.618, 1e-3);
}

TEST(Config, ShippedReferenceFile) {
  const auto cfg = load_config(test::source_path("paper.config"));
  EXPECT_FALSE(cfg.capillary_radius_derived);
  EXPECT_EQ(cfg.setup.geometry.capillary_inner_radius_um, 18.3);
  EXPECT_EQ(cfg.fields.pump1.alpha_db_per_m, 0.07);
  EXPECT_EQ(cfg.fields.pump2.alpha_db_per_m, 0.37);
  EXPECT_EQ(cfg.fields.probe.alpha_db_per_m, 0.93);
  ASSERT_TRUE(cfg.projection.has_value());
  EXPECT_EQ(cfg.projection->incoupling, 0.83);
  EXPECT_EQ(cfg.screening.catalog_path, test::source_path("data/h2_raman_lines.csv"));
  ASSERT_TRUE(cfg.bend.lp01_cutoff.has_value());
  EXPECT_EQ(cfg.bend.lp01_cutoff->radius_m, 0.10);
}

TEST(Config, UnknownKeysReportedWithPath) {
  EXPECT_NE(config_error(std::string(kMinimal) + "extra: 1\n").find("'extra'"), std::string::npos);
  std::string y = kMinimal;
  y.replace(y.find("  num_capillaries"), 0, "  core_radius: 4\n");
  EXPECT_NE(config_error(y).find("'fiber.core_radius'"), std::string::npos);
  EXPECT_NE(config_error(std::string(kMinimal) + "bend:\n  pairings:\n    - {core: [0,1], clad: [1,1]}\n")
                .find("bend.pairings[0]"),
            std::string::npos);
}

TEST(Config, MissingBlocksAndKeys) {
  EXPECT_NE(config_error("fiber: {core_radius_um: 23}\n").find("fiber."), std::string::npos);
  std::string y = kMinimal;
  y.erase(y.find("  probe_nm: 914\n"), 16);
  EXPECT_NE(config_error(y).find("scheme.probe_nm"), std::string::npos);
  EXPECT_NE(config_error("scheme: 3\n").find("mapping"), std::string::npos);
}

TEST(Config, ValueValidation) {
  EXPECT_NE(config_error(std::string(kMinimal) + "efficiency:\n  loss_variant: cubic\n").find("loss_variant"),
            std::string::npos);
  EXPECT_NE(config_error(std::string(kMinimal) + "phase_match:\n  bracket_bar: [100, 10]\n").find("bracket"),
            std::string::npos);
  EXPECT_NE(config_error(std::string(kMinimal) + "phase_match:\n  pressure_sweep: 1:2\n").find("pressure_sweep"),
            std::string::npos);
  EXPECT_NE(config_error(std::string(kMinimal) + "fields:\n  pump1: {power_w: -3}\n").find("power"),
            std::string::npos);
  EXPECT_NE(config_error(std::string(kMinimal) + "bend:\n  modes: [[7, 1]]\n").find("bend.modes[0]"),
            std::string::npos);
  EXPECT_NE(config_error("fiber: [1, 2\n").find("malformed"), std::string::npos);
}

TEST(Config, InfeasibleSchemeIsAConfigError) {
  std::string y = kMinimal;
  y.replace(y.find("detuning_tolerance_cm1: 10"), 26, "detuning_tolerance_cm1: 1");
  EXPECT_NE(config_error(y).find("detuned"), std::string::npos);
}

TEST(Config, NormalizedEchoAndDigest) {
  const auto a = parse_config(kMinimal);
  auto b = parse_config(std::string("# comment\n") + kMinimal);
  EXPECT_EQ(a.normalized(), b.normalized());
  EXPECT_EQ(a.digest(), b.digest());
  EXPECT_EQ(a.digest().size(), 16u);
  EXPECT_NE(a.normalized().find("fiber.capillary_inner_radius_um = "), std::string::npos);
  EXPECT_NE(a.normalized().find("(derived)"), std::string::npos);
  b.model.variant = LossVariant::Lossless;
  EXPECT_NE(a.digest(), b.digest());
}

TEST(Config, OptionalWallSellmeierAndVirial) {
  std::string y = kMinimal;
  y.replace(y.find("  num_capillaries: 7\n"), 20,
            "  num_capillaries: 7\n  wall_sellmeier: [[0.6961663, 0.004679148], [0.4079426, 0.01351206], "
            "[0.8974794, 97.934]]\n  index_model: marcatili\n");
  y.replace(y.find("  reference_temperature_k"), 0, "  compressibility_per_bar: 0.0006\n");
  const auto cfg = parse_config(y);
  EXPECT_FALSE(cfg.setup.geometry.wall_index.is_constant());
  EXPECT_EQ(cfg.setup.index.model, IndexModel::Marcatili);
  ASSERT_TRUE(static_cast<bool>(cfg.setup.gas.compressibility));
  EXPECT_NEAR(cfg.setup.gas.compressibility(100.0, 293.0), 1.06, 1e-12);
}

TEST(SweepRange, ParseAndValues) {
  const auto r = SweepRange::parse("0:10:11");
  const auto v = r.values();
  ASSERT_EQ(v.size(), 11u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 10.0);
  EXPECT_EQ(v[5], 5.0);
  EXPECT_EQ(SweepRange::parse("3:3:1").values(), std::vector<double>{3.0});
  EXPECT_EQ(r.to_string(), "0:10:11");
  for (const char* bad : {"1:2", "a:2:3", "1:2:0", "2:1:5", "1:2:3:4", ""}) EXPECT_THROW(SweepRange::parse(bad), Error) << bad;
}

TEST(Csv, NumberFormattingRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -2.5}) {
    const auto s = csv::format_double(v);
    EXPECT_EQ(*csv::to_double(s), v);
  }
  EXPECT_EQ(csv::escape_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape_field("plain"), "plain");
}

}  // namespace
}  // namespace csrs
