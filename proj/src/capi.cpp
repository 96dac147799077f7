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

#include "csrs/csrs.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "csrs/bendloss.hpp"
#include "csrs/commands.hpp"
#include "csrs/error.hpp"

struct csrs_config {
  csrs::ToolkitConfig cfg;
};

struct csrs_report {
  csrs::Report report;
  std::vector<std::string> csv;  // cached per table
};

namespace {

thread_local std::string g_last_error;

csrs_status to_status(csrs::ErrorCode code) { return static_cast<csrs_status>(static_cast<int>(code)); }

template <class F>
csrs_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return CSRS_OK;
  } catch (const csrs::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CSRS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CSRS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CSRS_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  csrs::require(p != nullptr, csrs::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

std::optional<csrs::SweepRange> range_of(const char* text) {
  if (!text) return std::nullopt;
  return csrs::SweepRange::parse(text);
}

csrs_status emit(csrs::Report&& rep, csrs_report** out) {
  auto* r = new csrs_report{std::move(rep), {}};
  for (const auto& t : r->report.tables) r->csv.push_back(t.to_csv(r->report.metadata));
  *out = r;
  if (r->report.exit_code == 3) {
    g_last_error = r->report.message;
    return CSRS_ERR_NOT_CONVERGED;
  }
  return CSRS_OK;
}

const csrs::Table* table_at(const csrs_report* r, size_t t) {
  if (!r || t >= r->report.tables.size()) return nullptr;
  return &r->report.tables[t];
}

}  // namespace

extern "C" {

const char* csrs_version(void) { return CSRS_VERSION; }

const char* csrs_last_error(void) { return g_last_error.c_str(); }

int csrs_exit_code(csrs_status status) {
  if (status == CSRS_OK) return 0;
  return csrs::exit_code_for(static_cast<csrs::ErrorCode>(static_cast<int>(status)));
}

csrs_status csrs_bessel_zero(int l, int m, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = csrs::bessel_zero(l, m);
  });
}

csrs_status csrs_marcatili_index(double lambda_nm, double core_radius_um, int l, int m, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = csrs::marcatili_mode_index(lambda_nm, core_radius_um, csrs::ModeLabel{l, m});
  });
}

csrs_status csrs_signal_wavelength(double probe_nm, double pump1_nm, double pump2_nm, double* out_nm) {
  return guarded([&] {
    need(out_nm, "out_nm");
    *out_nm = csrs::signal_wavelength(probe_nm, pump1_nm, pump2_nm);
  });
}

csrs_status csrs_raman_beat_thz(double pump1_nm, double pump2_nm, double* out_thz) {
  return guarded([&] {
    need(out_thz, "out_thz");
    *out_thz = csrs::raman_beat_thz(pump1_nm, pump2_nm);
  });
}

csrs_status csrs_phase_matching_factor(double delta_beta_rad_per_m, double length_m, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = csrs::phase_matching_factor(delta_beta_rad_per_m, length_m);
  });
}

csrs_status csrs_alpha_linear(double alpha_db_per_m, double* out_per_m) {
  return guarded([&] {
    need(out_per_m, "out_per_m");
    *out_per_m = csrs::alpha_linear(alpha_db_per_m);
  });
}

csrs_status csrs_critical_bend_radius(double core_radius_um, double capillary_radius_um, double wall_thickness_um,
                                      int num_capillaries, double lambda_nm, int core_l, int core_m, int clad_l,
                                      int clad_m, double* out_m) {
  return guarded([&] {
    need(out_m, "out_m");
    csrs::FiberGeometry g;
    g.core_radius_um = core_radius_um;
    g.capillary_inner_radius_um = capillary_radius_um;
    g.wall_thickness_um = wall_thickness_um;
    g.num_capillaries = num_capillaries;
    g.validate();
    *out_m = csrs::critical_bend_radius(g, lambda_nm, {core_l, core_m}, {clad_l, clad_m});
  });
}

csrs_status csrs_config_load(const char* path, csrs_config** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new csrs_config{csrs::load_config(path)};
  });
}

csrs_status csrs_config_parse(const char* yaml_text, const char* base_dir, csrs_config** out) {
  return guarded([&] {
    need(yaml_text, "yaml_text");
    need(out, "out");
    *out = new csrs_config{csrs::parse_config(yaml_text, base_dir ? base_dir : ".")};
  });
}

void csrs_config_free(csrs_config* cfg) { delete cfg; }

csrs_status csrs_config_set_loss_variant(csrs_config* cfg, const char* name) {
  return guarded([&] {
    need(cfg, "cfg");
    need(name, "name");
    cfg->cfg.model.variant = csrs::loss_variant_from_string(name);
  });
}

csrs_status csrs_config_set_seed(csrs_config* cfg, uint64_t seed) {
  return guarded([&] {
    need(cfg, "cfg");
    cfg->cfg.seed = seed;
  });
}

csrs_status csrs_config_digest(const csrs_config* cfg, char* buf, size_t size) {
  return guarded([&] {
    need(cfg, "cfg");
    need(buf, "buf");
    const auto d = cfg->cfg.digest();
    csrs::require(size > d.size(), csrs::ErrorCode::InvalidArgument, "digest buffer too small");
    std::memcpy(buf, d.c_str(), d.size() + 1);
  });
}

csrs_status csrs_config_optimal_pressure(const csrs_config* cfg, double* out_bar) {
  return guarded([&] {
    need(cfg, "cfg");
    need(out_bar, "out_bar");
    const auto& c = cfg->cfg;
    *out_bar = csrs::optimal_pressure(c.setup, c.scheme(), c.bracket_lo_bar, c.bracket_hi_bar).pressure_bar;
  });
}

csrs_status csrs_run_phase_match(const csrs_config* cfg, const char* range, csrs_report** out) {
  csrs_status st = CSRS_OK;
  const auto g = guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    st = emit(csrs::run_phase_match(cfg->cfg, range_of(range)), out);
  });
  return g != CSRS_OK ? g : st;
}

csrs_status csrs_run_efficiency(const csrs_config* cfg, const char* range, csrs_report** out) {
  csrs_status st = CSRS_OK;
  const auto g = guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    st = emit(csrs::run_efficiency(cfg->cfg, range_of(range)), out);
  });
  return g != CSRS_OK ? g : st;
}

csrs_status csrs_run_bend(const csrs_config* cfg, const char* range, csrs_report** out) {
  csrs_status st = CSRS_OK;
  const auto g = guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    st = emit(csrs::run_bend(cfg->cfg, range_of(range)), out);
  });
  return g != CSRS_OK ? g : st;
}

csrs_status csrs_run_screen(const csrs_config* cfg, csrs_report** out) {
  csrs_status st = CSRS_OK;
  const auto g = guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    st = emit(csrs::run_screen(cfg->cfg), out);
  });
  return g != CSRS_OK ? g : st;
}

csrs_status csrs_run_fit(const csrs_config* cfg, const char* kind, const char* data_csv, csrs_report** out) {
  csrs_status st = CSRS_OK;
  const auto g = guarded([&] {
    need(cfg, "cfg");
    need(kind, "kind");
    need(data_csv, "data_csv");
    need(out, "out");
    st = emit(csrs::run_fit(cfg->cfg, csrs::fit_kind_from_string(kind), data_csv), out);
  });
  return g != CSRS_OK ? g : st;
}

void csrs_report_free(csrs_report* report) { delete report; }

size_t csrs_report_table_count(const csrs_report* report) { return report ? report->report.tables.size() : 0; }

const char* csrs_report_table_name(const csrs_report* report, size_t table) {
  const auto* t = table_at(report, table);
  return t ? t->name.c_str() : nullptr;
}

size_t csrs_report_row_count(const csrs_report* report, size_t table) {
  const auto* t = table_at(report, table);
  return t ? t->rows.size() : 0;
}

size_t csrs_report_column_count(const csrs_report* report, size_t table) {
  const auto* t = table_at(report, table);
  return t ? t->columns.size() : 0;
}

const char* csrs_report_column_name(const csrs_report* report, size_t table, size_t col) {
  const auto* t = table_at(report, table);
  return t && col < t->columns.size() ? t->columns[col].c_str() : nullptr;
}

const char* csrs_report_cell(const csrs_report* report, size_t table, size_t row, size_t col) {
  const auto* t = table_at(report, table);
  if (!t || row >= t->rows.size() || col >= t->rows[row].size()) return nullptr;
  return t->rows[row][col].c_str();
}

const char* csrs_report_csv(const csrs_report* report, size_t table) {
  if (!table_at(report, table)) return nullptr;
  return report->csv[table].c_str();
}

size_t csrs_report_warning_count(const csrs_report* report) { return report ? report->report.warnings.size() : 0; }

const char* csrs_report_warning(const csrs_report* report, size_t index) {
  if (!report || index >= report->report.warnings.size()) return nullptr;
  return report->report.warnings[index].c_str();
}

const char* csrs_report_message(const csrs_report* report) { return report ? report->report.message.c_str() : nullptr; }

csrs_status csrs_report_write(const csrs_report* report, const char* dir) {
  return guarded([&] {
    need(report, "report");
    need(dir, "dir");
    csrs::write_report(report->report, dir);
  });
}

}  // extern "C"
