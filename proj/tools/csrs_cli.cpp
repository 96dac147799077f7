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

// csrskit: design sweeps and fits for CW CSRS frequency conversion in
// gas-filled hollow-core fiber. Every subcommand writes CSV tables into --out.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "csrs/csrs.h"

namespace {

struct ConfigDeleter {
  void operator()(csrs_config* c) const { csrs_config_free(c); }
};
struct ReportDeleter {
  void operator()(csrs_report* r) const { csrs_report_free(r); }
};
using ConfigPtr = std::unique_ptr<csrs_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<csrs_report, ReportDeleter>;

int report_error(csrs_status st) {
  std::cerr << "csrskit: error: " << csrs_last_error() << "\n";
  return csrs_exit_code(st);
}

void print_fit(const csrs_report* rep) {
  // First table holds parameter, value, std_error.
  for (size_t i = 0; i < csrs_report_row_count(rep, 0); ++i) {
    const std::string se = csrs_report_cell(rep, 0, i, 2);
    std::cout << csrs_report_cell(rep, 0, i, 0) << " = " << csrs_report_cell(rep, 0, i, 1);
    if (!se.empty()) std::cout << " +- " << se;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"csrskit: CW CSRS frequency-conversion design toolkit"};
  app.set_version_flag("--version", std::string("csrskit ") + csrs_version());
  app.require_subcommand(1);

  std::string config_path = "paper.config";
  std::string out_dir = ".";
  std::optional<uint64_t> seed;
  std::optional<std::string> loss_variant;
  app.add_option("--config", config_path, "Configuration file (YAML)")->capture_default_str();
  app.add_option("--out", out_dir, "Output directory for CSV tables")->capture_default_str();
  app.add_option("--seed", seed, "Random seed recorded in the output metadata");
  app.add_option("--loss-variant", loss_variant, "lossless | lumped-exponential | amplitude-integral");

  std::optional<std::string> pressures, lengths, radii;
  auto* pm = app.add_subcommand("phase-match", "Phase mismatch versus pressure and the optimal pressure");
  pm->add_option("--pressures", pressures, "Pressure sweep start:stop:count in bar");
  auto* eff = app.add_subcommand("efficiency", "Efficiency versus fiber length and the loss report");
  eff->add_option("--lengths", lengths, "Length sweep start:stop:count in m");
  auto* bend = app.add_subcommand("bend", "Mode accessibility versus bend radius");
  bend->add_option("--radii", radii, "Bend radius sweep start:stop:count in m");
  auto* scr = app.add_subcommand("screen", "Parasitic Raman channels inside the signal bandpass");
  std::string fit_kind, fit_data;
  auto* fit = app.add_subcommand("fit", "Fit measured data (cutback | efficiency | bend)");
  fit->add_option("kind", fit_kind, "cutback | efficiency | bend")->required();
  fit->add_option("data", fit_data, "CSV with header x,y[,sigma]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  csrs_config* raw_cfg = nullptr;
  if (auto st = csrs_config_load(config_path.c_str(), &raw_cfg); st != CSRS_OK) return report_error(st);
  ConfigPtr cfg(raw_cfg);
  if (loss_variant)
    if (auto st = csrs_config_set_loss_variant(cfg.get(), loss_variant->c_str()); st != CSRS_OK)
      return report_error(st);
  if (seed)
    if (auto st = csrs_config_set_seed(cfg.get(), *seed); st != CSRS_OK) return report_error(st);

  auto c_str = [](const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; };
  csrs_report* raw = nullptr;
  csrs_status st = CSRS_OK;
  if (*pm) st = csrs_run_phase_match(cfg.get(), c_str(pressures), &raw);
  else if (*eff) st = csrs_run_efficiency(cfg.get(), c_str(lengths), &raw);
  else if (*bend) st = csrs_run_bend(cfg.get(), c_str(radii), &raw);
  else if (*scr) st = csrs_run_screen(cfg.get(), &raw);
  else st = csrs_run_fit(cfg.get(), fit_kind.c_str(), fit_data.c_str(), &raw);

  // A non-converged fit still produces a report with the best iterate.
  if (!raw) return report_error(st);
  ReportPtr rep(raw);
  const std::string pending_error = st == CSRS_OK ? "" : csrs_last_error();

  if (auto w = csrs_report_write(rep.get(), out_dir.c_str()); w != CSRS_OK) return report_error(w);
  for (size_t i = 0; i < csrs_report_warning_count(rep.get()); ++i)
    std::cerr << "csrskit: warning: " << csrs_report_warning(rep.get(), i) << "\n";
  if (*fit) print_fit(rep.get());
  for (size_t i = 0; i < csrs_report_table_count(rep.get()); ++i)
    std::cout << "wrote " << out_dir << "/" << csrs_report_table_name(rep.get(), i) << " ("
              << csrs_report_row_count(rep.get(), i) << " rows)\n";
  if (st != CSRS_OK) {
    std::cerr << "csrskit: error: " << pending_error << "\n";
    return csrs_exit_code(st);
  }
  return 0;
}
