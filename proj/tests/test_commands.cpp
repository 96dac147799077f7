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

#include <cmath>
#include <filesystem>
#include <fstream>

#include "csrs/commands.hpp"
#include "csrs/csv.hpp"
#include "csrs/error.hpp"
#include "test_support.hpp"

namespace csrs {
namespace {

namespace fs = std::filesystem;

ToolkitConfig reference_config() { return load_config(test::source_path("paper.config")); }

double cell(const Table& t, std::size_t row, const std::string& column) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), column);
  EXPECT_NE(it, t.columns.end()) << column;
  return *csv::to_double(t.rows.at(row).at(static_cast<std::size_t>(it - t.columns.begin())));
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "csrs_command_tests";
  fs::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

TEST(PhaseMatchCommand, RowsAndOptimalPressure) {
  const auto cfg = reference_config();
  const auto rep = run_phase_match(cfg, SweepRange::parse("60:120:61"));
  const auto* t = rep.find("phase_match.csv");
  ASSERT_NE(t, nullptr);
  ASSERT_EQ(t->rows.size(), 62u);
  EXPECT_EQ(t->rows.back()[0], "p_opt");
  const double p = cell(*t, 61, "pressure_bar");
  EXPECT_GE(p, 60.0);
  EXPECT_LE(p, 100.0);
  EXPECT_NEAR(cell(*t, 61, "sinc2"), 1.0, 1e-12);
  // The sampled sign change brackets the reported root.
  for (std::size_t i = 1; i < 61; ++i) {
    const double a = cell(*t, i - 1, "delta_beta_rad_per_m"), b = cell(*t, i, "delta_beta_rad_per_m");
    if (std::signbit(a) != std::signbit(b)) {
      EXPECT_GE(p, cell(*t, i - 1, "pressure_bar"));
      EXPECT_LE(p, cell(*t, i, "pressure_bar"));
    }
  }
  EXPECT_EQ(run_phase_match(cfg).find("phase_match.csv")->rows.size(),
            static_cast<std::size_t>(cfg.pressure_sweep.count) + 1);
}

TEST(PhaseMatchCommand, DegenerateSchemeHasNoRoot) {
  auto cfg = reference_config();
  cfg.probe_nm = 942.0;
  cfg.raman_shift_cm1 = 1e7 / 942.0 - 1e7 / 1550.0;
  try {
    run_phase_match(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRoot);
    EXPECT_EQ(exit_code_for(e.code()), 2);
  }
}

TEST(EfficiencyCommand, ReferenceLengthsMatchModule) {
  const auto cfg = reference_config();
  const auto rep = run_efficiency(cfg, SweepRange::parse("0.27:1.85:2"));
  // Sweep endpoints only; check the remaining reference lengths directly.
  const auto* t = rep.find("fig3_efficiency.csv");
  ASSERT_NE(t, nullptr);
  for (std::size_t i = 0; i < 2; ++i) {
    const double l = cell(*t, i, "length_m");
    EXPECT_EQ(cell(*t, i, "efficiency"), predicted_efficiency(cfg.model, cfg.effective_fields(), l));
  }
  for (double l : {0.27, 1.16, 1.47, 1.85}) {
    const auto r = run_efficiency(cfg, SweepRange{l, l, 1});
    EXPECT_EQ(cell(*r.find("fig3_efficiency.csv"), 0, "efficiency"),
              predicted_efficiency(cfg.model, cfg.effective_fields(), l));
  }
  EXPECT_NEAR(cell(*t, 1, "efficiency_percent"), 0.054, 0.0005);
  EXPECT_EQ(t->rows.back()[0], "optimum");
}

TEST(EfficiencyCommand, ZeroPowerGivesZeroColumn) {
  auto cfg = reference_config();
  cfg.fields.pump2.power_w = 0.0;
  const auto rep = run_efficiency(cfg);
  const auto* t = rep.find("fig3_efficiency.csv");
  for (std::size_t i = 0; i + 1 < t->rows.size(); ++i) EXPECT_EQ(cell(*t, i, "efficiency"), 0.0);
}

TEST(EfficiencyCommand, LosslessColumnIsQuadraticAndOptimumUnbounded) {
  auto cfg = reference_config();
  cfg.model.variant = LossVariant::Lossless;
  const auto rep = run_efficiency(cfg, SweepRange::parse("0.1:1.6:16"));
  const auto* t = rep.find("fig3_efficiency.csv");
  for (std::size_t i = 0; i < 16; ++i) {
    const double l = cell(*t, i, "length_m");
    EXPECT_NEAR(cell(*t, i, "efficiency") / (l * l), cell(*t, 0, "efficiency") / 0.01, 1e-15);
  }
  EXPECT_EQ(t->rows.back()[4], "unbounded");
}

TEST(EfficiencyCommand, ReportCrossChecks) {
  const auto rep = run_efficiency(reference_config());
  const auto* t = rep.find("efficiency_report.csv");
  ASSERT_NE(t, nullptr);
  auto row = [&](const std::string& q) -> const std::vector<std::string>& {
    for (const auto& r : t->rows)
      if (r[0] == q) return r;
    ADD_FAILURE() << "missing " << q;
    return t->rows.front();
  };
  EXPECT_NEAR(*csv::to_double(row("loss.total_alpha")[1]), 2.1602, 1e-4);
  EXPECT_NEAR(*csv::to_double(row("loss.alpha_signal")[1]), 0.7902, 1e-4);
  EXPECT_NEAR(*csv::to_double(row("max_power_efficiency")[1]), 0.292572, 1e-9);
  EXPECT_NEAR(*csv::to_double(row("theoretical_efficiency")[1]), 1.80708, 1e-9);
  const double l_opt = *csv::to_double(row("projection.optimum_length")[1]);
  EXPECT_NEAR(l_opt, 136.57, 0.01);
  EXPECT_EQ(row("projection.optimum_length")[3], "21");
  EXPECT_NEAR(*csv::to_double(row("projection.optimum_length_search")[1]) / l_opt, 1.0, 1e-3);
  EXPECT_NE(row("projection.note")[5].find("not reproduced"), std::string::npos);
  EXPECT_FALSE(rep.warnings.empty());
}

TEST(BendCommand, CriticalRadiusAndBoundaryRow) {
  const auto cfg = reference_config();
  const auto rep = run_bend(cfg);
  const auto* crit = rep.find("fig6_critical_radii.csv");
  ASSERT_NE(crit, nullptr);
  EXPECT_EQ(crit->rows[0][0], "configured");
  EXPECT_NEAR(cell(*crit, 0, "critical_radius_m"), 0.237, 5e-4);
  const auto* t = rep.find("fig6_bend.csv");
  ASSERT_EQ(t->rows.size(), 60u);
  std::size_t boundary = 0;
  for (std::size_t i = 0; i < t->rows.size(); ++i)
    if (t->rows[i][0] == "critical") boundary = i;
  ASSERT_GT(boundary, 0u);
  EXPECT_EQ(cell(*t, boundary, "bend_radius_m"), cell(*crit, 0, "critical_radius_m"));
  for (std::size_t i = 0; i < t->rows.size(); ++i) {
    EXPECT_EQ(cell(*t, i, "LP01_accessible"), i >= boundary ? 1.0 : 0.0) << i;
    EXPECT_EQ(cell(*t, i, "LP11_accessible"), 1.0);
  }
}

TEST(BendCommand, RangeAboveAllCriticalRadii) {
  const auto rep = run_bend(reference_config(), SweepRange::parse("1:10:10"));
  const auto* t = rep.find("fig6_bend.csv");
  ASSERT_EQ(t->rows.size(), 10u);
  for (const auto& r : t->rows) {
    EXPECT_EQ(r[0], "sample");
    EXPECT_EQ(r[2], "1");
    EXPECT_EQ(r[3], "1");
  }
}

TEST(ScreenCommand, ShippedCatalog) {
  const auto rep = run_screen(reference_config());
  const auto* t = rep.find("fig5_screen.csv");
  ASSERT_EQ(t->rows.size(), 2u);
  EXPECT_EQ(t->rows[0][3], "0-0 S(0)");
  EXPECT_EQ(t->rows[1][3], "1-0 O(2)");
  EXPECT_GE(cell(*t, 0, "rel_strength"), cell(*t, 1, "rel_strength"));
}

TEST(ScreenCommand, EmptyCatalogAndHighThreshold) {
  auto cfg = reference_config();
  cfg.screening.catalog_path = temp_file("empty.csv", "nu0_cm1,e_lower_cm1,rel_strength,band,branch,j_lower\n");
  EXPECT_TRUE(run_screen(cfg).tables.at(0).rows.empty());
  cfg = reference_config();
  cfg.screening.strength_threshold = 1.1;
  EXPECT_TRUE(run_screen(cfg).tables.at(0).rows.empty());
}

TEST(ScreenCommand, InvalidRowsAreAnInputError) {
  auto cfg = reference_config();
  cfg.screening.catalog_path =
      temp_file("bad.csv", "nu0_cm1,e_lower_cm1,rel_strength,band,branch,j_lower\n354,0,1,0-0,X,0\n");
  try {
    run_screen(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(exit_code_for(e.code()), 2);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  cfg.screening.catalog_path = "/nonexistent/catalog.csv";
  EXPECT_THROW(run_screen(cfg), Error);
}

TEST(FitCommand, Kinds) {
  const auto cfg = reference_config();
  const auto cut = run_fit(cfg, FitKind::Cutback, test::source_path("data/synthetic_cutback_914.csv"));
  EXPECT_EQ(cut.exit_code, 0);
  EXPECT_NEAR(cell(*cut.find("fit_cutback.csv"), 0, "value"), 0.93, 1e-10);
  ASSERT_NE(cut.find("fig4_cutback.csv"), nullptr);
  const auto eff = run_fit(cfg, FitKind::Efficiency, test::source_path("data/synthetic_efficiency.csv"));
  EXPECT_NEAR(cell(*eff.find("fit_efficiency.csv"), 0, "value"), 0.0044, 1e-12);
  const auto bend = run_fit(cfg, FitKind::Bend, test::source_path("data/synthetic_bend.csv"));
  EXPECT_NEAR(cell(*bend.find("fit_bend.csv"), 0, "value"), 83.0, 1e-6);
  EXPECT_NEAR(cell(*bend.find("fit_bend.csv"), 2, "value"), 0.10, 1e-8);
}

TEST(FitCommand, NonConvergenceExitsWithThree) {
  std::string text = "x,y\n";
  for (int i = 0; i < 10; ++i) text += std::to_string(0.1 + 0.05 * i) + "," + std::to_string(10 * i) + "\n";
  const auto rep = run_fit(reference_config(), FitKind::Bend, temp_file("line.csv", text));
  EXPECT_EQ(rep.exit_code, 3);
  EXPECT_FALSE(rep.message.empty());
  EXPECT_EQ(rep.find("fit_bend.csv")->rows.size(), 7u);
}

TEST(FitCommand, MalformedCsv) {
  try {
    run_fit(reference_config(), FitKind::Cutback, temp_file("bad_series.csv", "x,y\n1,2\n2,x\n3,4\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(exit_code_for(e.code()), 2);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Commands, MetadataHeaderAndDeterminism) {
  const auto cfg = reference_config();
  const auto a = run_bend(cfg), b = run_bend(cfg);
  const auto text = a.tables[0].to_csv(a.metadata);
  EXPECT_EQ(text, b.tables[0].to_csv(b.metadata));
  EXPECT_EQ(text.rfind("# tool = csrskit ", 0), 0u);
  EXPECT_NE(text.find("# config_digest = fnv1a64:" + cfg.digest()), std::string::npos);
  EXPECT_NE(text.find("# index_model = zeisberger"), std::string::npos);
  EXPECT_NE(text.find("# loss_variant = lumped-exponential"), std::string::npos);
  EXPECT_NE(text.find("# config fiber.core_radius_um = 23"), std::string::npos);
}

TEST(Commands, WriteReport) {
  const auto dir = fs::temp_directory_path() / "csrs_command_tests" / "out";
  fs::remove_all(dir);
  const auto rep = run_screen(reference_config());
  write_report(rep, dir.string());
  std::ifstream in(dir / "fig5_screen.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), rep.tables[0].to_csv(rep.metadata));
}

}  // namespace
}  // namespace csrs
