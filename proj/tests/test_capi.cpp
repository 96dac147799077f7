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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "csrs/csrs.h"

namespace {

std::string source_path(const std::string& rel) { return std::string(CSRS_SOURCE_DIR) + "/" + rel; }

struct ConfigHandle {
  csrs_config* cfg = nullptr;
  ~ConfigHandle() { csrs_config_free(cfg); }
};

struct ReportHandle {
  csrs_report* rep = nullptr;
  ~ReportHandle() { csrs_report_free(rep); }
};

long find_table(const csrs_report* rep, const std::string& name) {
  for (size_t i = 0; i < csrs_report_table_count(rep); ++i)
    if (name == csrs_report_table_name(rep, i)) return static_cast<long>(i);
  return -1;
}

TEST(CApi, VersionAndExitCodes) {
  EXPECT_STREQ(csrs_version(), "0.1.0");
  EXPECT_EQ(csrs_exit_code(CSRS_OK), 0);
  EXPECT_EQ(csrs_exit_code(CSRS_ERR_NOT_CONVERGED), 3);
  EXPECT_EQ(csrs_exit_code(CSRS_ERR_INTERNAL), 1);
  for (auto s : {CSRS_ERR_INVALID_ARGUMENT, CSRS_ERR_NO_ROOT, CSRS_ERR_PARSE, CSRS_ERR_CONFIG, CSRS_ERR_IO})
    EXPECT_EQ(csrs_exit_code(s), 2);
}

TEST(CApi, Scalars) {
  double v = 0.0;
  ASSERT_EQ(csrs_bessel_zero(0, 1, &v), CSRS_OK);
  EXPECT_NEAR(v, 2.404825557695773, 1e-12);
  ASSERT_EQ(csrs_signal_wavelength(914.0, 1550.0, 942.0, &v), CSRS_OK);
  EXPECT_NEAR(v, 1475.618, 1e-3);
  ASSERT_EQ(csrs_raman_beat_thz(1550.0, 942.0, &v), CSRS_OK);
  EXPECT_NEAR(v, 124.8365, 1e-3);
  ASSERT_EQ(csrs_phase_matching_factor(0.0, 1.85, &v), CSRS_OK);
  EXPECT_EQ(v, 1.0);
  ASSERT_EQ(csrs_alpha_linear(10.0 / std::log(10.0), &v), CSRS_OK);
  EXPECT_NEAR(v, 1.0, 1e-15);
  ASSERT_EQ(csrs_critical_bend_radius(23.0, 18.3, 1.28, 7, 914.0, 0, 1, 1, 1, &v), CSRS_OK);
  EXPECT_NEAR(v, 0.2371377, 1e-6);
  ASSERT_EQ(csrs_marcatili_index(914.0, 23.0, 0, 1, &v), CSRS_OK);
  EXPECT_LT(v, 1.0);
}

TEST(CApi, ErrorsSetLastError) {
  double v = 0.0;
  EXPECT_EQ(csrs_bessel_zero(0, 1, nullptr), CSRS_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(csrs_last_error()).find("out"), std::string::npos);
  EXPECT_NE(csrs_bessel_zero(-1, 1, &v), CSRS_OK);
  EXPECT_STRNE(csrs_last_error(), "");
  EXPECT_EQ(csrs_critical_bend_radius(23.0, 23.0, 1.28, 7, 914.0, 0, 1, 0, 1, &v), CSRS_ERR_NO_RESONANCE);
  ASSERT_EQ(csrs_alpha_linear(1.0, &v), CSRS_OK);
  EXPECT_STREQ(csrs_last_error(), "");
}

TEST(CApi, ConfigLoadDigestAndOptimalPressure) {
  ConfigHandle h;
  ASSERT_EQ(csrs_config_load(source_path("paper.config").c_str(), &h.cfg), CSRS_OK) << csrs_last_error();
  char small[8];
  EXPECT_EQ(csrs_config_digest(h.cfg, small, sizeof small), CSRS_ERR_INVALID_ARGUMENT);
  char a[17], b[17];
  ASSERT_EQ(csrs_config_digest(h.cfg, a, sizeof a), CSRS_OK);
  EXPECT_EQ(std::string(a).size(), 16u);
  ASSERT_EQ(csrs_config_set_loss_variant(h.cfg, "lossless"), CSRS_OK);
  ASSERT_EQ(csrs_config_digest(h.cfg, b, sizeof b), CSRS_OK);
  EXPECT_STRNE(a, b);
  EXPECT_EQ(csrs_config_set_loss_variant(h.cfg, "cubic"), CSRS_ERR_INVALID_ARGUMENT);
  double p = 0.0;
  ASSERT_EQ(csrs_config_optimal_pressure(h.cfg, &p), CSRS_OK);
  EXPECT_NEAR(p, 92.79, 0.05);
}

TEST(CApi, ConfigErrors) {
  ConfigHandle h;
  EXPECT_EQ(csrs_config_load("/nonexistent/x.yaml", &h.cfg), CSRS_ERR_IO);
  EXPECT_EQ(h.cfg, nullptr);
  EXPECT_EQ(csrs_config_parse("fiber: {bogus: 1}\n", nullptr, &h.cfg), CSRS_ERR_CONFIG);
  EXPECT_NE(std::string(csrs_last_error()).find("fiber"), std::string::npos);
}

TEST(CApi, ReportAccessors) {
  ConfigHandle h;
  ASSERT_EQ(csrs_config_load(source_path("paper.config").c_str(), &h.cfg), CSRS_OK);
  ReportHandle r;
  ASSERT_EQ(csrs_run_phase_match(h.cfg, "80:100:21", &r.rep), CSRS_OK) << csrs_last_error();
  const long t = find_table(r.rep, "phase_match.csv");
  ASSERT_GE(t, 0);
  EXPECT_EQ(csrs_report_row_count(r.rep, t), 22u);
  EXPECT_EQ(csrs_report_column_count(r.rep, t), 4u);
  EXPECT_STREQ(csrs_report_column_name(r.rep, t, 1), "pressure_bar");
  EXPECT_STREQ(csrs_report_cell(r.rep, t, 0, 1), "80");
  EXPECT_STREQ(csrs_report_cell(r.rep, t, 21, 0), "p_opt");
  EXPECT_EQ(csrs_report_cell(r.rep, t, 22, 0), nullptr);
  EXPECT_EQ(csrs_report_cell(r.rep, 99, 0, 0), nullptr);
  const std::string csv = csrs_report_csv(r.rep, t);
  EXPECT_EQ(csv.rfind("# tool = csrskit 0.1.0\n", 0), 0u);
  EXPECT_STREQ(csrs_report_message(r.rep), "");

  ReportHandle bad;
  EXPECT_EQ(csrs_run_phase_match(h.cfg, "1:2", &bad.rep), CSRS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad.rep, nullptr);
}

TEST(CApi, ReportWriteMatchesCsv) {
  ConfigHandle h;
  ASSERT_EQ(csrs_config_load(source_path("paper.config").c_str(), &h.cfg), CSRS_OK);
  ReportHandle r;
  ASSERT_EQ(csrs_run_screen(h.cfg, &r.rep), CSRS_OK);
  const auto dir = std::filesystem::temp_directory_path() / "csrs_capi_out";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(csrs_report_write(r.rep, dir.string().c_str()), CSRS_OK);
  std::ifstream in(dir / "fig5_screen.csv", std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), csrs_report_csv(r.rep, 0));
  EXPECT_EQ(csrs_report_row_count(r.rep, 0), 2u);
}

TEST(CApi, EfficiencyWarningsAndBend) {
  ConfigHandle h;
  ASSERT_EQ(csrs_config_load(source_path("paper.config").c_str(), &h.cfg), CSRS_OK);
  ReportHandle e;
  ASSERT_EQ(csrs_run_efficiency(h.cfg, nullptr, &e.rep), CSRS_OK);
  ASSERT_GE(csrs_report_warning_count(e.rep), 1u);
  EXPECT_NE(std::string(csrs_report_warning(e.rep, 0)).size(), 0u);
  EXPECT_EQ(csrs_report_warning(e.rep, 1000), nullptr);
  ReportHandle b;
  ASSERT_EQ(csrs_run_bend(h.cfg, "0.3:0.6:4", &b.rep), CSRS_OK);
  EXPECT_EQ(csrs_report_row_count(b.rep, find_table(b.rep, "fig6_bend.csv")), 4u);
}

TEST(CApi, FitStatuses) {
  ConfigHandle h;
  ASSERT_EQ(csrs_config_load(source_path("paper.config").c_str(), &h.cfg), CSRS_OK);
  ReportHandle ok;
  ASSERT_EQ(csrs_run_fit(h.cfg, "cutback", source_path("data/synthetic_cutback_1550.csv").c_str(), &ok.rep),
            CSRS_OK);
  EXPECT_STREQ(csrs_report_cell(ok.rep, 0, 0, 0), "alpha_db_per_m");
  ReportHandle unknown;
  EXPECT_EQ(csrs_run_fit(h.cfg, "spline", source_path("data/synthetic_bend.csv").c_str(), &unknown.rep),
            CSRS_ERR_INVALID_ARGUMENT);

  const auto path = std::filesystem::temp_directory_path() / "csrs_capi_line.csv";
  {
    std::ofstream out(path);
    out << "x,y\n";
    for (int i = 0; i < 10; ++i) out << 0.1 + 0.05 * i << "," << 10 * i << "\n";
  }
  ReportHandle nc;
  EXPECT_EQ(csrs_run_fit(h.cfg, "bend", path.string().c_str(), &nc.rep), CSRS_ERR_NOT_CONVERGED);
  ASSERT_NE(nc.rep, nullptr);
  EXPECT_STRNE(csrs_report_message(nc.rep), "");
}

}  // namespace
