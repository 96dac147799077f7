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

#include "csrs/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "csrs/csv.hpp"
#include "csrs/error.hpp"
#include "csrs/fitting.hpp"

namespace csrs {

namespace {

std::string num(double v) { return csv::format_double(v); }

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::string flag(bool b) { return b ? "1" : "0"; }

std::string relative_deviation(double value, std::optional<double> reference) {
  if (!reference || *reference == 0.0) return {};
  return num((value - *reference) / *reference);
}

Report base_report(const ToolkitConfig& cfg) {
  Report r;
  r.metadata = metadata_lines(cfg);
  return r;
}

}  // namespace

std::string Table::to_csv(const std::vector<std::string>& metadata) const {
  std::string out;
  for (const auto& m : metadata) out += "# " + m + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + csv::escape_field(columns[i]);
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv::escape_field(row[i]);
    out += "\n";
  }
  return out;
}

const Table* Report::find(const std::string& name) const {
  for (const auto& t : tables)
    if (t.name == name) return &t;
  return nullptr;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConverged: return 3;
    case ErrorCode::Internal: return 1;
    default: return 2;
  }
}

std::vector<std::string> metadata_lines(const ToolkitConfig& cfg) {
  std::vector<std::string> m;
  m.push_back(std::string("tool = csrskit ") + CSRS_VERSION);
  m.push_back("config_digest = fnv1a64:" + cfg.digest());
  m.push_back(std::string("index_model = ") + to_string(cfg.setup.index.model));
  m.push_back(std::string("loss_variant = ") + to_string(cfg.model.variant));
  m.push_back("seed = " + std::to_string(cfg.seed));
  const std::string normalized = cfg.normalized();
  std::size_t start = 0;
  while (start < normalized.size()) {
    const auto end = normalized.find('\n', start);
    m.push_back("config " + normalized.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return m;
}

// ---------------------------------------------------------------------------

Report run_phase_match(const ToolkitConfig& cfg, std::optional<SweepRange> pressures) {
  Report r = base_report(cfg);
  const auto scheme = cfg.scheme();
  const auto p_opt = optimal_pressure(cfg.setup, scheme, cfg.bracket_lo_bar, cfg.bracket_hi_bar);

  Table t{"phase_match.csv", {"kind", "pressure_bar", "delta_beta_rad_per_m", "sinc2"}, {}};
  for (double p : (pressures ? *pressures : cfg.pressure_sweep).values()) {
    require(p >= 0.0, ErrorCode::InvalidArgument, "pressure samples must be non-negative");
    const double db = delta_beta(cfg.setup, scheme, p);
    t.rows.push_back({"sample", num(p), num(db), num(phase_matching_factor(db, cfg.interaction_length_m))});
  }
  t.rows.push_back({"p_opt", num(p_opt.pressure_bar), num(p_opt.residual_rad_per_m),
                    num(phase_matching_factor(p_opt.residual_rad_per_m, cfg.interaction_length_m))});
  r.tables.push_back(std::move(t));

  Table s{"phase_match_summary.csv", {"quantity", "value", "unit"}, {}};
  s.rows.push_back({"signal_wavelength", num(scheme.signal_nm), "nm"});
  s.rows.push_back({"raman_beat", num(raman_beat_thz(scheme.pump1_nm, scheme.pump2_nm)), "THz"});
  s.rows.push_back({"raman_detuning", num(scheme.detuning_cm1()), "cm-1"});
  s.rows.push_back({"optimal_pressure", num(p_opt.pressure_bar), "bar"});
  s.rows.push_back({"root_iterations", std::to_string(p_opt.iterations), ""});
  try {
    const auto acc =
        pressure_acceptance(cfg.setup, scheme, cfg.interaction_length_m, p_opt.pressure_bar, cfg.acceptance_scan_bar);
    s.rows.push_back({"acceptance_lower", num(acc.lower_bar), "bar"});
    s.rows.push_back({"acceptance_upper", num(acc.upper_bar), "bar"});
    s.rows.push_back({"acceptance_width", num(acc.width_bar()), "bar"});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unbounded) throw;
    s.rows.push_back({"acceptance_width", "unbounded", "bar"});
    r.warnings.push_back(std::string("pressure acceptance: ") + e.what());
  }
  r.tables.push_back(std::move(s));
  return r;
}

// ---------------------------------------------------------------------------

Report run_efficiency(const ToolkitConfig& cfg, std::optional<SweepRange> lengths) {
  Report r = base_report(cfg);
  const auto fields = cfg.effective_fields();
  const auto& model = cfg.model;

  Table t{"fig3_efficiency.csv", {"kind", "length_m", "efficiency", "efficiency_percent", "status"}, {}};
  for (double l : (lengths ? *lengths : cfg.length_sweep).values()) {
    const double eta = predicted_efficiency(model, fields, l);
    const bool over = exceeds_undepleted_limit(eta);
    t.rows.push_back({"sample", num(l), num(eta), num(eta * 100.0), over ? "exceeds-undepleted-limit" : "ok"});
  }
  try {
    const auto opt = optimal_length(model, fields);
    t.rows.push_back({"optimum", num(opt.length_m), num(opt.efficiency), num(opt.efficiency * 100.0),
                      exceeds_undepleted_limit(opt.efficiency) ? "exceeds-undepleted-limit" : "ok"});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unbounded) throw;
    t.rows.push_back({"optimum", "", "", "", "unbounded"});
  }
  if (std::any_of(t.rows.begin(), t.rows.end(), [](const auto& row) { return row[4] == "exceeds-undepleted-limit"; }))
    r.warnings.push_back("efficiency above 1 in fig3_efficiency.csv: outside the undepleted-pump regime");
  r.tables.push_back(std::move(t));

  // Cross-checks of the quoted efficiency numbers.
  Table rep{"efficiency_report.csv", {"quantity", "value", "unit", "reference", "relative_deviation", "note"}, {}};
  const auto& ref = cfg.references;
  if (ref.fitted_eta_percent_per_w2) {
    const auto lc = loss_consistency(model.c_percent_per_w2m2, *ref.fitted_eta_percent_per_w2, ref.fit_length_m,
                                     cfg.fields.pump1.alpha_db_per_m, cfg.fields.pump2.alpha_db_per_m,
                                     cfg.fields.probe.alpha_db_per_m);
    rep.rows.push_back({"loss.transmission_ratio", num(lc.transmission_ratio), "", "", "",
                        "fitted efficiency over lossless C*L^2"});
    rep.rows.push_back({"loss.total_alpha", num(lc.total_alpha_db_per_m), "dB/m", "", "",
                        "solves exp(-sum(alpha)*L) = transmission_ratio"});
    rep.rows.push_back({"loss.measured_alpha", num(lc.measured_alpha_db_per_m), "dB/m", "", "",
                        "pump1 + pump2 + probe cut-back values"});
    rep.rows.push_back({"loss.alpha_signal", num(lc.alpha_signal_db_per_m), "dB/m",
                        num(model.alpha_signal_db_per_m), "", "remainder attributed to the signal"});
    if (lc.alpha_signal_db_per_m < 0.0)
      r.warnings.push_back("loss bookkeeping: measured attenuations exceed the total implied by the fit");

    if (ref.max_pump1_power_w > 0.0 && ref.max_pump2_power_w > 0.0) {
      const double eta = *ref.fitted_eta_percent_per_w2 * ref.max_pump1_power_w * ref.max_pump2_power_w;
      rep.rows.push_back({"max_power_efficiency", num(eta), "%", opt_num(ref.max_power_efficiency_percent),
                          relative_deviation(eta, ref.max_power_efficiency_percent),
                          "fitted efficiency per W^2 times both maximum pump powers"});
    }
  }
  if (ref.theoretical_pump1_power_w > 0.0 && ref.theoretical_pump2_power_w > 0.0) {
    const double eta = model.c_percent_per_w2m2 * ref.theoretical_pump1_power_w * ref.theoretical_pump2_power_w *
                       ref.fit_length_m * ref.fit_length_m;
    rep.rows.push_back({"theoretical_efficiency", num(eta), "%", opt_num(ref.theoretical_efficiency_percent),
                        relative_deviation(eta, ref.theoretical_efficiency_percent),
                        "lossless C*P1*P2*L^2"});
  }

  if (cfg.projection) {
    const auto& p = *cfg.projection;
    ConversionFields pf = fields;
    const double a = p.attenuation_db_per_km / 1000.0;
    pf.pump1.power_w = p.pump1_power_w;
    pf.pump2.power_w = p.pump2_power_w;
    pf.pump1.incoupling = pf.pump2.incoupling = p.incoupling;
    pf.probe.incoupling = 1.0;
    pf.pump1.alpha_db_per_m = pf.pump2.alpha_db_per_m = pf.probe.alpha_db_per_m = a;
    EfficiencyModel pm = model;
    pm.variant = LossVariant::LumpedExponential;
    pm.alpha_signal_db_per_m = a;
    const double total = total_alpha_linear(pm, pf);
    const double closed = lumped_optimal_length(total);
    const auto opt = optimal_length(pm, pf, 1e-3, 1e5);
    rep.rows.push_back({"projection.total_alpha", num(alpha_db(total)), "dB/m", "", "",
                        "one attenuation for all four fields"});
    rep.rows.push_back({"projection.optimum_length", num(closed), "m", opt_num(p.reference_optimum_length_m),
                        relative_deviation(closed, p.reference_optimum_length_m),
                        "closed form 2/sum(alpha) for the lumped model"});
    rep.rows.push_back({"projection.optimum_length_search", num(opt.length_m), "m", "", "",
                        "numerical maximum of the lumped model"});
    rep.rows.push_back({"projection.efficiency_at_optimum", num(opt.efficiency), "fraction",
                        opt_num(p.reference_efficiency), relative_deviation(opt.efficiency, p.reference_efficiency),
                        "incoupling applied to the pump powers"});
    std::string note =
        "the quoted optimum length is not reproduced: with every field attenuated the lumped optimum "
        "is 2/sum(alpha), far longer than the quoted value";
    if (exceeds_undepleted_limit(opt.efficiency)) {
      note += "; the undepleted-pump efficiency at that length exceeds 1 so pump depletion would dominate";
      r.warnings.push_back("projection: efficiency at the optimum length exceeds 1 (undepleted-pump model invalid)");
    }
    rep.rows.push_back({"projection.note", "", "", "", "", note});
  }
  r.tables.push_back(std::move(rep));
  return r;
}

// ---------------------------------------------------------------------------

Report run_bend(const ToolkitConfig& cfg, std::optional<SweepRange> radii) {
  Report r = base_report(cfg);
  const auto& geom = cfg.setup.geometry;
  const auto& bs = cfg.bend;
  const double lambda = bs.wavelength_nm > 0.0 ? bs.wavelength_nm : cfg.probe_nm;

  std::vector<double> samples = (radii ? *radii : bs.radius_sweep).values();
  for (double x : samples) require(x > 0.0, ErrorCode::InvalidArgument, "bend radii must be positive");

  // Critical radii per pairing, for both the configured and the touching geometry.
  Table crit{"fig6_critical_radii.csv",
             {"geometry", "capillary_inner_radius_um", "core_mode", "cladding_mode", "center_distance_um",
              "critical_radius_m"},
             {}};
  FiberGeometry touching = geom;
  touching.capillary_inner_radius_um = touching_capillary_radius(geom.core_radius_um, geom.num_capillaries);
  std::set<double> boundaries;
  for (const auto& [label, g] : {std::pair<const char*, const FiberGeometry*>{"configured", &geom},
                                 std::pair<const char*, const FiberGeometry*>{"touching", &touching}}) {
    const double d = capillary_center_distance(*g, bs.alignment, bs.azimuth_rad);
    for (const auto& pairing : bs.pairings) {
      std::string value = "none";
      try {
        const double rc =
            critical_bend_radius(*g, lambda, pairing.core, pairing.cladding, bs.alignment, bs.azimuth_rad);
        value = num(rc);
        if (g == &geom) boundaries.insert(rc);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoResonance) throw;
      }
      crit.rows.push_back({label, num(g->capillary_inner_radius_um), pairing.core.name(), pairing.cladding.name(),
                           num(d), value});
    }
  }

  struct Sample {
    double radius;
    bool boundary;
  };
  std::vector<Sample> rows;
  for (double x : samples) rows.push_back({x, false});
  const double lo = *std::min_element(samples.begin(), samples.end());
  const double hi = *std::max_element(samples.begin(), samples.end());
  for (double b : boundaries)
    if (b >= lo && b <= hi) rows.push_back({b, true});
  std::stable_sort(rows.begin(), rows.end(), [](const Sample& a, const Sample& b) { return a.radius < b.radius; });

  Table t{"fig6_bend.csv", {"kind", "bend_radius_m"}, {}};
  for (const auto& m : bs.modes) t.columns.push_back(m.name() + "_accessible");
  const bool has_cutoff = bs.lp01_cutoff && std::find(bs.modes.begin(), bs.modes.end(), ModeLabel{0, 1}) != bs.modes.end();
  if (has_cutoff) t.columns.push_back("LP01_below_empirical_cutoff");
  for (const auto& s : rows) {
    BendConfiguration bc{s.radius, bs.alignment, bs.azimuth_rad};
    const auto acc = mode_accessibility(geom, lambda, bc, bs.modes, bs.pairings, bs.lp01_cutoff);
    std::vector<std::string> row{s.boundary ? "critical" : "sample", num(s.radius)};
    std::optional<bool> below;
    for (const auto& a : acc) {
      row.push_back(flag(!a.suppressed));
      if (a.below_empirical_cutoff) below = a.below_empirical_cutoff;
    }
    if (has_cutoff) row.push_back(below ? flag(*below) : "");
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));
  r.tables.push_back(std::move(crit));
  return r;
}

// ---------------------------------------------------------------------------

Report run_screen(const ToolkitConfig& cfg) {
  Report r = base_report(cfg);
  require(!cfg.screening.catalog_path.empty(), ErrorCode::Config, "screening.catalog is not set");
  const auto catalog = load_catalog(cfg.screening.catalog_path);
  if (!catalog.diagnostics.empty()) {
    std::string msg = "catalog '" + cfg.screening.catalog_path + "' has invalid rows:";
    for (const auto& d : catalog.diagnostics) msg += "\n  line " + std::to_string(d.line) + ": " + d.message;
    fail(ErrorCode::Parse, msg);
  }
  const auto fields = cfg.effective_fields();
  ScreenOptions opt;
  opt.strength_threshold = cfg.screening.strength_threshold;
  opt.driven_shift_cm1 = cfg.raman_shift_cm1;
  opt.driven_tolerance_cm1 = cfg.detuning_tolerance_cm1;
  const auto flags = screen({fields.pump1, fields.pump2}, fields.probe, catalog.lines, cfg.screening.bandpass, opt);

  Table t{"fig5_screen.csv",
          {"rank", "field", "field_nm", "line", "nu0_cm1", "rel_strength", "direction", "landing_nm",
           "offset_from_center_nm", "initial_state_energy_cm1"},
          {}};
  int rank = 1;
  for (const auto& f : flags)
    t.rows.push_back({std::to_string(rank++), f.field, num(f.field_nm), f.line.label(), num(f.line.nu0_cm1),
                      num(f.line.rel_strength), to_string(f.direction), num(f.landing_nm),
                      num(f.offset_from_center_nm), num(f.initial_state_energy_cm1)});
  r.tables.push_back(std::move(t));
  return r;
}

// ---------------------------------------------------------------------------

FitKind fit_kind_from_string(const std::string& name) {
  if (name == "cutback") return FitKind::Cutback;
  if (name == "efficiency") return FitKind::Efficiency;
  if (name == "bend") return FitKind::Bend;
  fail(ErrorCode::InvalidArgument, "unknown fit kind '" + name + "' (cutback|efficiency|bend)");
}

const char* to_string(FitKind kind) {
  switch (kind) {
    case FitKind::Cutback: return "cutback";
    case FitKind::Efficiency: return "efficiency";
    case FitKind::Bend: return "bend";
  }
  return "?";
}

Report run_fit(const ToolkitConfig& cfg, FitKind kind, const std::string& data_csv_path) {
  Report r = base_report(cfg);
  r.metadata.push_back("fit_kind = " + std::string(to_string(kind)));
  r.metadata.push_back("data = " + data_csv_path);
  const auto series = load_series(data_csv_path);

  FitResult fit;
  std::function<double(double)> model;
  std::string data_name;
  switch (kind) {
    case FitKind::Cutback: {
      fit = fit_cutback(series);
      const double a = fit.value("alpha_db_per_m"), c = fit.value("intercept_db");
      model = [a, c](double x) { return c - a * x; };
      data_name = "fig4_cutback.csv";
      break;
    }
    case FitKind::Efficiency: {
      const auto fields = cfg.effective_fields();
      fit = fit_efficiency_length(series, cfg.model, fields);
      EfficiencyModel m = cfg.model;
      m.c_percent_per_w2m2 = fit.value("c_percent_per_w2m2");
      model = [m, fields](double x) { return predicted_efficiency(m, fields, x); };
      data_name = "fig3_efficiency_fit.csv";
      break;
    }
    case FitKind::Bend: {
      fit = fit_bend_saturation(series);
      const double p = fit.value("p_max"), b = fit.value("b"), r0 = fit.value("r0");
      model = [p, b, r0](double x) { return saturation_curve(p, b, r0, x); };
      data_name = "fig6_bend_fit.csv";
      break;
    }
  }

  Table params{"fit_" + std::string(to_string(kind)) + ".csv", {"parameter", "value", "std_error"}, {}};
  for (const auto& p : fit.parameters) params.rows.push_back({p.name, num(p.value), opt_num(p.std_error)});
  params.rows.push_back({"residual_norm", num(fit.residual_norm), ""});
  params.rows.push_back({"degrees_of_freedom", std::to_string(fit.degrees_of_freedom), ""});
  params.rows.push_back({"iterations", std::to_string(fit.iterations), ""});
  params.rows.push_back({"converged", flag(fit.converged), ""});
  r.tables.push_back(std::move(params));

  Table data{data_name, {"x", "y", "fitted", "residual"}, {}};
  for (const auto& p : series.points) {
    const double f = model(p.x);
    data.rows.push_back({num(p.x), num(p.y), num(f), num(p.y - f)});
  }
  r.tables.push_back(std::move(data));

  if (!fit.converged) {
    r.exit_code = 3;
    r.message = "fit did not converge after " + std::to_string(fit.iterations) +
                " iterations; the best iterate was written";
  }
  return r;
}

void write_report(const Report& report, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  require(!ec, ErrorCode::Io, "cannot create output directory '" + dir + "': " + ec.message());
  for (const auto& t : report.tables) {
    const auto path = (std::filesystem::path(dir) / t.name).string();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::Io, "cannot write '" + path + "'");
    out << t.to_csv(report.metadata);
    require(static_cast<bool>(out), ErrorCode::Io, "write failed for '" + path + "'");
  }
}

}  // namespace csrs
