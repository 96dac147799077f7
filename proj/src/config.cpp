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

#include "csrs/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "csrs/csv.hpp"
#include "csrs/error.hpp"

namespace csrs {

namespace {

std::string num(double v) { return csv::format_double(v); }

// A YAML mapping whose keys must all be consumed.
class Block {
 public:
  Block(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {
    require(node_.IsMap(), ErrorCode::Config, "'" + path_ + "' must be a mapping");
  }

  bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  YAML::Node take(const std::string& key) {
    used_.insert(key);
    return node_[key];
  }

  std::string key_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  double number(const std::string& key) {
    require(has(key), ErrorCode::Config, "missing required key '" + key_path(key) + "'");
    return as_number(take(key), key_path(key));
  }

  double number(const std::string& key, double fallback) {
    return has(key) ? number(key) : (used_.insert(key), fallback);
  }

  std::optional<double> optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return number(key);
  }

  int integer(const std::string& key, std::optional<int> fallback = std::nullopt) {
    if (!has(key)) {
      require(fallback.has_value(), ErrorCode::Config, "missing required key '" + key_path(key) + "'");
      return *fallback;
    }
    const auto n = take(key);
    try {
      return n.as<int>();
    } catch (const YAML::Exception&) {
      fail(ErrorCode::Config, "'" + key_path(key) + "' must be an integer");
    }
  }

  std::string text(const std::string& key, std::optional<std::string> fallback = std::nullopt) {
    if (!has(key)) {
      require(fallback.has_value(), ErrorCode::Config, "missing required key '" + key_path(key) + "'");
      return *fallback;
    }
    const auto n = take(key);
    require(n.IsScalar(), ErrorCode::Config, "'" + key_path(key) + "' must be a scalar");
    return n.Scalar();
  }

  Block child(const std::string& key) { return Block(take(key), key_path(key)); }

  void finish() const {
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!used_.count(key)) fail(ErrorCode::Config, "unknown key '" + key_path(key) + "'");
    }
  }

  static double as_number(const YAML::Node& n, const std::string& where) {
    require(n.IsScalar(), ErrorCode::Config, "'" + where + "' must be a number");
    const auto v = csv::to_double(n.Scalar());
    require(v.has_value(), ErrorCode::Config, "'" + where + "' must be a number, got '" + n.Scalar() + "'");
    return *v;
  }

 private:
  YAML::Node node_;
  std::string path_;
  std::set<std::string> used_;
};

std::vector<double> number_list(const YAML::Node& n, const std::string& where) {
  require(n.IsSequence(), ErrorCode::Config, "'" + where + "' must be a list");
  std::vector<double> out;
  for (std::size_t i = 0; i < n.size(); ++i)
    out.push_back(Block::as_number(n[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

ModeLabel mode_of(const YAML::Node& n, const std::string& where) {
  const auto v = number_list(n, where);
  require(v.size() == 2 && v[0] == std::floor(v[0]) && v[1] == std::floor(v[1]), ErrorCode::Config,
          "'" + where + "' must be a pair [l, m] of integers");
  ModeLabel m{static_cast<int>(v[0]), static_cast<int>(v[1])};
  try {
    (void)m.bessel_zero();
  } catch (const Error& e) {
    fail(ErrorCode::Config, "'" + where + "': " + e.what());
  }
  return m;
}

std::vector<SellmeierTerm> sellmeier_of(const YAML::Node& n, const std::string& where) {
  require(n.IsSequence() && n.size() > 0, ErrorCode::Config,
          "'" + where + "' must be a non-empty list of [B, C_um2] pairs");
  std::vector<SellmeierTerm> terms;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto v = number_list(n[i], where + "[" + std::to_string(i) + "]");
    require(v.size() == 2, ErrorCode::Config, "'" + where + "[" + std::to_string(i) + "]' must be [B, C_um2]");
    terms.push_back({v[0], v[1]});
  }
  return terms;
}

SweepRange sweep_of(Block& b, const std::string& key, SweepRange fallback) {
  if (!b.has(key)) return fallback;
  const auto text = b.text(key);
  try {
    return SweepRange::parse(text);
  } catch (const Error& e) {
    fail(ErrorCode::Config, "'" + b.key_path(key) + "': " + e.what());
  }
}

LightField field_of(Block b, double wavelength_nm) {
  LightField f;
  f.wavelength_nm = wavelength_nm;
  f.power_w = b.number("power_w", 0.0);
  f.alpha_db_per_m = b.number("alpha_db_per_m", 0.0);
  f.incoupling = b.number("incoupling", 1.0);
  b.finish();
  try {
    f.validate();
  } catch (const Error& e) {
    fail(ErrorCode::Config, e.what());
  }
  return f;
}

void append(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << key << " = " << value << '\n';
}

std::string mode_text(const ModeLabel& m) {
  return "[" + std::to_string(m.l) + "," + std::to_string(m.m) + "]";
}

}  // namespace

// ---------------------------------------------------------------------------

SweepRange SweepRange::parse(std::string_view text) {
  const std::string t = csv::trim(text);
  const auto c1 = t.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : t.find(':', c1 + 1);
  require(c1 != std::string::npos && c2 != std::string::npos && t.find(':', c2 + 1) == std::string::npos,
          ErrorCode::InvalidArgument, "range '" + t + "' must have the form start:stop:count");
  const auto start = csv::to_double(t.substr(0, c1));
  const auto stop = csv::to_double(t.substr(c1 + 1, c2 - c1 - 1));
  const auto count = csv::to_integer(t.substr(c2 + 1));
  require(start && stop && count, ErrorCode::InvalidArgument, "range '" + t + "' has a non-numeric part");
  require(*count >= 1 && *count <= 1000000, ErrorCode::InvalidArgument, "range count must be in [1, 1e6]");
  require(*count == 1 || *stop > *start, ErrorCode::InvalidArgument, "range stop must exceed start");
  return {*start, *stop, static_cast<int>(*count)};
}

std::vector<double> SweepRange::values() const {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    v.push_back(start);
    return v;
  }
  for (int i = 0; i < count; ++i)
    v.push_back(i == count - 1 ? stop : start + (stop - start) * i / (count - 1));
  return v;
}

std::string SweepRange::to_string() const { return num(start) + ":" + num(stop) + ":" + std::to_string(count); }

ConversionScheme ToolkitConfig::scheme() const {
  auto s = ConversionScheme::make(pump1_nm, pump2_nm, probe_nm, raman_shift_cm1, detuning_tolerance_cm1);
  s.modes = modes;
  return s;
}

ConversionFields ToolkitConfig::effective_fields() const {
  ConversionFields f = fields;
  if (incoupling_override) {
    f.pump1.incoupling = *incoupling_override;
    f.pump2.incoupling = *incoupling_override;
    f.probe.incoupling = *incoupling_override;
  }
  return f;
}

std::string ToolkitConfig::normalized() const {
  std::ostringstream os;
  const auto& g = setup.geometry;
  append(os, "fiber.core_radius_um", num(g.core_radius_um));
  append(os, "fiber.capillary_inner_radius_um",
         num(g.capillary_inner_radius_um) + (capillary_radius_derived ? " (derived)" : ""));
  append(os, "fiber.wall_thickness_um", num(g.wall_thickness_um));
  append(os, "fiber.num_capillaries", std::to_string(g.num_capillaries));
  if (g.wall_index.is_constant()) {
    append(os, "fiber.wall_index", num(g.wall_index.constant_value()));
  } else {
    std::string terms;
    for (const auto& t : g.wall_index.terms()) terms += "[" + num(t.b) + "," + num(t.c_um2) + "]";
    append(os, "fiber.wall_sellmeier", terms);
  }
  append(os, "fiber.index_model", to_string(setup.index.model));
  append(os, "fiber.resonance_exclusion", num(setup.index.resonance_exclusion));

  std::string gas_terms;
  for (const auto& t : setup.gas.refractivity) gas_terms += "[" + num(t.b) + "," + num(t.c_um2) + "]";
  append(os, "gas.species", setup.gas.species);
  append(os, "gas.sellmeier", gas_terms);
  append(os, "gas.reference_pressure_bar", num(setup.gas.reference_pressure_bar));
  append(os, "gas.reference_temperature_k", num(setup.gas.reference_temperature_k));
  append(os, "gas.temperature_k", num(setup.temperature_k));

  append(os, "scheme.pump1_nm", num(pump1_nm));
  append(os, "scheme.pump2_nm", num(pump2_nm));
  append(os, "scheme.probe_nm", num(probe_nm));
  append(os, "scheme.raman_shift_cm1", num(raman_shift_cm1));
  append(os, "scheme.detuning_tolerance_cm1", num(detuning_tolerance_cm1));
  append(os, "scheme.modes", mode_text(modes.pump1) + mode_text(modes.pump2) + mode_text(modes.probe) +
                                 mode_text(modes.signal));

  append(os, "phase_match.bracket_bar", "[" + num(bracket_lo_bar) + "," + num(bracket_hi_bar) + "]");
  append(os, "phase_match.interaction_length_m", num(interaction_length_m));
  append(os, "phase_match.pressure_sweep", pressure_sweep.to_string());
  append(os, "phase_match.acceptance_scan_bar", num(acceptance_scan_bar));

  const auto field = [&](const std::string& name, const LightField& f) {
    append(os, "fields." + name, "power_w=" + num(f.power_w) + " alpha_db_per_m=" + num(f.alpha_db_per_m) +
                                     " incoupling=" + num(f.incoupling));
  };
  field("pump1", fields.pump1);
  field("pump2", fields.pump2);
  field("probe", fields.probe);
  if (incoupling_override) append(os, "fields.incoupling_override", num(*incoupling_override));

  append(os, "efficiency.loss_variant", to_string(model.variant));
  append(os, "efficiency.c_percent_per_w2m2", num(model.c_percent_per_w2m2));
  append(os, "efficiency.alpha_signal_db_per_m", num(model.alpha_signal_db_per_m));
  append(os, "efficiency.length_sweep", length_sweep.to_string());
  const auto& r = references;
  if (r.fitted_eta_percent_per_w2)
    append(os, "efficiency.reference.fitted_eta_percent_per_w2", num(*r.fitted_eta_percent_per_w2));
  append(os, "efficiency.reference.fit_length_m", num(r.fit_length_m));
  if (r.max_power_efficiency_percent)
    append(os, "efficiency.reference.max_power_efficiency_percent", num(*r.max_power_efficiency_percent));
  append(os, "efficiency.reference.max_pump_powers_w",
         "[" + num(r.max_pump1_power_w) + "," + num(r.max_pump2_power_w) + "]");
  if (r.theoretical_efficiency_percent)
    append(os, "efficiency.reference.theoretical_efficiency_percent", num(*r.theoretical_efficiency_percent));
  append(os, "efficiency.reference.theoretical_pump_powers_w",
         "[" + num(r.theoretical_pump1_power_w) + "," + num(r.theoretical_pump2_power_w) + "]");

  if (projection) {
    const auto& p = *projection;
    append(os, "projection.pump_powers_w", "[" + num(p.pump1_power_w) + "," + num(p.pump2_power_w) + "]");
    append(os, "projection.attenuation_db_per_km", num(p.attenuation_db_per_km));
    append(os, "projection.incoupling", num(p.incoupling));
    if (p.reference_optimum_length_m)
      append(os, "projection.reference_optimum_length_m", num(*p.reference_optimum_length_m));
    if (p.reference_efficiency) append(os, "projection.reference_efficiency", num(*p.reference_efficiency));
  }

  append(os, "bend.wavelength_nm", num(bend.wavelength_nm));
  std::string modes_text;
  for (const auto& m : bend.modes) modes_text += mode_text(m);
  append(os, "bend.modes", modes_text);
  std::string pair_text;
  for (const auto& p : bend.pairings) pair_text += mode_text(p.core) + "->" + mode_text(p.cladding) + " ";
  append(os, "bend.pairings", csv::trim(pair_text));
  append(os, "bend.radius_sweep", bend.radius_sweep.to_string());
  if (bend.lp01_cutoff)
    append(os, "bend.lp01_cutoff_m", num(bend.lp01_cutoff->radius_m) + " +- " + num(bend.lp01_cutoff->uncertainty_m));
  append(os, "bend.alignment", bend.alignment == BendAlignment::WorstCase ? "worst-case" : "angle-resolved");
  append(os, "bend.azimuth_rad", num(bend.azimuth_rad));

  append(os, "screening.catalog", screening.catalog_path);
  append(os, "screening.bandpass_center_nm", num(screening.bandpass.center_nm));
  append(os, "screening.bandpass_width_nm", num(screening.bandpass.width_nm));
  append(os, "screening.strength_threshold", num(screening.strength_threshold));
  return os.str();
}

std::string ToolkitConfig::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : normalized()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---------------------------------------------------------------------------

ToolkitConfig parse_config(std::string_view yaml_text, const std::string& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    fail(ErrorCode::Config, std::string("malformed configuration: ") + e.what());
  }
  require(root.IsMap(), ErrorCode::Config, "configuration must be a mapping of blocks");
  Block top(root, "");
  ToolkitConfig cfg;

  {
    Block b = top.child("fiber");
    auto& g = cfg.setup.geometry;
    g.core_radius_um = b.number("core_radius_um");
    g.wall_thickness_um = b.number("wall_thickness_um");
    g.num_capillaries = b.integer("num_capillaries");
    if (b.has("capillary_inner_radius_um")) {
      g.capillary_inner_radius_um = b.number("capillary_inner_radius_um");
    } else {
      require(g.core_radius_um > 0.0 && g.num_capillaries >= 3, ErrorCode::Config,
              "fiber.core_radius_um and fiber.num_capillaries must be valid to derive the capillary radius");
      g.capillary_inner_radius_um = touching_capillary_radius(g.core_radius_um, g.num_capillaries);
      cfg.capillary_radius_derived = true;
    }
    require(!(b.has("wall_index") && b.has("wall_sellmeier")), ErrorCode::Config,
            "give either fiber.wall_index or fiber.wall_sellmeier, not both");
    try {
      if (b.has("wall_sellmeier"))
        g.wall_index = WallIndexModel::sellmeier(sellmeier_of(b.take("wall_sellmeier"), "fiber.wall_sellmeier"));
      else
        g.wall_index = WallIndexModel::constant(b.number("wall_index", 1.444));
      cfg.setup.index.model = index_model_from_string(b.text("index_model", std::string("zeisberger")));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Config) throw;
      fail(ErrorCode::Config, std::string("fiber: ") + e.what());
    }
    cfg.setup.index.resonance_exclusion = b.number("resonance_exclusion", 0.03);
    require(cfg.setup.index.resonance_exclusion >= 0.0 && cfg.setup.index.resonance_exclusion < 0.5,
            ErrorCode::Config, "fiber.resonance_exclusion must lie in [0, 0.5)");
    b.finish();
    try {
      g.validate();
    } catch (const Error& e) {
      fail(ErrorCode::Config, std::string("fiber: ") + e.what());
    }
  }

  {
    Block b = top.child("gas");
    auto& gas = cfg.setup.gas;
    gas.species = b.text("species", std::string("H2"));
    require(b.has("sellmeier"), ErrorCode::Config, "missing required key 'gas.sellmeier'");
    gas.refractivity = sellmeier_of(b.take("sellmeier"), "gas.sellmeier");
    gas.reference_pressure_bar = b.number("reference_pressure_bar");
    gas.reference_temperature_k = b.number("reference_temperature_k");
    cfg.setup.temperature_k = b.number("temperature_k", 293.0);
    const double virial = b.number("compressibility_per_bar", 0.0);
    if (virial != 0.0) gas.compressibility = [virial](double p, double) { return 1.0 + virial * p; };
    b.finish();
    require(cfg.setup.temperature_k > 0.0, ErrorCode::Config, "gas.temperature_k must be positive");
    try {
      gas.validate();
    } catch (const Error& e) {
      fail(ErrorCode::Config, std::string("gas: ") + e.what());
    }
  }

  {
    Block b = top.child("scheme");
    cfg.pump1_nm = b.number("pump1_nm");
    cfg.pump2_nm = b.number("pump2_nm");
    cfg.probe_nm = b.number("probe_nm");
    cfg.raman_shift_cm1 = b.number("raman_shift_cm1");
    cfg.detuning_tolerance_cm1 = b.number("detuning_tolerance_cm1", 5.0);
    if (b.has("modes")) {
      Block m = b.child("modes");
      if (m.has("pump1")) cfg.modes.pump1 = mode_of(m.take("pump1"), "scheme.modes.pump1");
      if (m.has("pump2")) cfg.modes.pump2 = mode_of(m.take("pump2"), "scheme.modes.pump2");
      if (m.has("probe")) cfg.modes.probe = mode_of(m.take("probe"), "scheme.modes.probe");
      if (m.has("signal")) cfg.modes.signal = mode_of(m.take("signal"), "scheme.modes.signal");
      m.finish();
    }
    b.finish();
    try {
      (void)cfg.scheme();
    } catch (const Error& e) {
      fail(ErrorCode::Config, std::string("scheme: ") + e.what());
    }
  }

  if (top.has("phase_match")) {
    Block b = top.child("phase_match");
    if (b.has("bracket_bar")) {
      const auto v = number_list(b.take("bracket_bar"), "phase_match.bracket_bar");
      require(v.size() == 2 && v[0] >= 0.0 && v[1] > v[0], ErrorCode::Config,
              "phase_match.bracket_bar must be [lo, hi] with 0 <= lo < hi");
      cfg.bracket_lo_bar = v[0];
      cfg.bracket_hi_bar = v[1];
    }
    cfg.interaction_length_m = b.number("interaction_length_m", cfg.interaction_length_m);
    require(cfg.interaction_length_m > 0.0, ErrorCode::Config, "phase_match.interaction_length_m must be positive");
    cfg.pressure_sweep = sweep_of(b, "pressure_sweep", cfg.pressure_sweep);
    cfg.acceptance_scan_bar = b.number("acceptance_scan_bar", cfg.acceptance_scan_bar);
    b.finish();
  }

  cfg.fields.pump1.wavelength_nm = cfg.pump1_nm;
  cfg.fields.pump2.wavelength_nm = cfg.pump2_nm;
  cfg.fields.probe.wavelength_nm = cfg.probe_nm;
  if (top.has("fields")) {
    Block b = top.child("fields");
    if (b.has("pump1")) cfg.fields.pump1 = field_of(b.child("pump1"), cfg.pump1_nm);
    if (b.has("pump2")) cfg.fields.pump2 = field_of(b.child("pump2"), cfg.pump2_nm);
    if (b.has("probe")) cfg.fields.probe = field_of(b.child("probe"), cfg.probe_nm);
    cfg.incoupling_override = b.optional_number("incoupling_override");
    require(!cfg.incoupling_override || (*cfg.incoupling_override >= 0.0 && *cfg.incoupling_override <= 1.0),
            ErrorCode::Config, "fields.incoupling_override must lie in [0, 1]");
    b.finish();
  }

  if (top.has("efficiency")) {
    Block b = top.child("efficiency");
    try {
      cfg.model.variant = loss_variant_from_string(b.text("loss_variant", std::string("lumped-exponential")));
    } catch (const Error& e) {
      fail(ErrorCode::Config, std::string("efficiency.loss_variant: ") + e.what());
    }
    cfg.model.c_percent_per_w2m2 = b.number("c_percent_per_w2m2", cfg.model.c_percent_per_w2m2);
    cfg.model.alpha_signal_db_per_m = b.number("alpha_signal_db_per_m", 0.0);
    cfg.length_sweep = sweep_of(b, "length_sweep", cfg.length_sweep);
    require(cfg.length_sweep.start > 0.0, ErrorCode::Config, "efficiency.length_sweep must start above 0 m");
    if (b.has("reference")) {
      Block r = b.child("reference");
      auto& ref = cfg.references;
      ref.fitted_eta_percent_per_w2 = r.optional_number("fitted_eta_percent_per_w2");
      ref.fit_length_m = r.number("fit_length_m", ref.fit_length_m);
      ref.max_power_efficiency_percent = r.optional_number("max_power_efficiency_percent");
      ref.max_pump1_power_w = r.number("max_pump1_power_w", 0.0);
      ref.max_pump2_power_w = r.number("max_pump2_power_w", 0.0);
      ref.theoretical_efficiency_percent = r.optional_number("theoretical_efficiency_percent");
      ref.theoretical_pump1_power_w = r.number("theoretical_pump1_power_w", 0.0);
      ref.theoretical_pump2_power_w = r.number("theoretical_pump2_power_w", 0.0);
      r.finish();
    }
    b.finish();
    try {
      cfg.model.validate();
    } catch (const Error& e) {
      fail(ErrorCode::Config, std::string("efficiency: ") + e.what());
    }
  }

  if (top.has("projection")) {
    Block b = top.child("projection");
    ProjectionScenario p;
    p.pump1_power_w = b.number("pump1_power_w");
    p.pump2_power_w = b.number("pump2_power_w");
    p.attenuation_db_per_km = b.number("attenuation_db_per_km");
    p.incoupling = b.number("incoupling", 1.0);
    p.reference_optimum_length_m = b.optional_number("reference_optimum_length_m");
    p.reference_efficiency = b.optional_number("reference_efficiency");
    b.finish();
    require(p.pump1_power_w >= 0.0 && p.pump2_power_w >= 0.0 && p.attenuation_db_per_km >= 0.0 &&
                p.incoupling >= 0.0 && p.incoupling <= 1.0,
            ErrorCode::Config, "projection values out of range");
    cfg.projection = p;
  }

  cfg.bend.wavelength_nm = cfg.probe_nm;
  if (top.has("bend")) {
    Block b = top.child("bend");
    cfg.bend.wavelength_nm = b.number("wavelength_nm", cfg.probe_nm);
    if (b.has("modes")) {
      const auto n = b.take("modes");
      require(n.IsSequence() && n.size() > 0, ErrorCode::Config, "bend.modes must be a non-empty list");
      cfg.bend.modes.clear();
      for (std::size_t i = 0; i < n.size(); ++i)
        cfg.bend.modes.push_back(mode_of(n[i], "bend.modes[" + std::to_string(i) + "]"));
    }
    if (b.has("pairings")) {
      const auto n = b.take("pairings");
      require(n.IsSequence(), ErrorCode::Config, "bend.pairings must be a list");
      cfg.bend.pairings.clear();
      for (std::size_t i = 0; i < n.size(); ++i) {
        const std::string where = "bend.pairings[" + std::to_string(i) + "]";
        Block p(n[i], where);
        ModePairing mp;
        require(p.has("core") && p.has("cladding"), ErrorCode::Config, "'" + where + "' needs core and cladding");
        mp.core = mode_of(p.take("core"), where + ".core");
        mp.cladding = mode_of(p.take("cladding"), where + ".cladding");
        p.finish();
        cfg.bend.pairings.push_back(mp);
      }
    }
    cfg.bend.radius_sweep = sweep_of(b, "radius_sweep", cfg.bend.radius_sweep);
    require(cfg.bend.radius_sweep.start > 0.0, ErrorCode::Config, "bend.radius_sweep must start above 0 m");
    if (b.has("lp01_cutoff_m")) {
      EmpiricalCutoff c;
      c.radius_m = b.number("lp01_cutoff_m");
      c.uncertainty_m = b.number("lp01_cutoff_uncertainty_m", 0.0);
      cfg.bend.lp01_cutoff = c;
    }
    const auto alignment = b.text("alignment", std::string("worst-case"));
    if (alignment == "worst-case") cfg.bend.alignment = BendAlignment::WorstCase;
    else if (alignment == "angle-resolved") cfg.bend.alignment = BendAlignment::AngleResolved;
    else fail(ErrorCode::Config, "bend.alignment must be worst-case or angle-resolved");
    cfg.bend.azimuth_rad = b.number("azimuth_deg", 0.0) * kPi / 180.0;
    b.finish();
  }

  if (top.has("screening")) {
    Block b = top.child("screening");
    if (b.has("catalog")) {
      std::filesystem::path p(b.text("catalog"));
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      cfg.screening.catalog_path = p.lexically_normal().string();
    }
    cfg.screening.bandpass.center_nm = b.number("bandpass_center_nm", cfg.screening.bandpass.center_nm);
    cfg.screening.bandpass.width_nm = b.number("bandpass_width_nm", cfg.screening.bandpass.width_nm);
    cfg.screening.strength_threshold = b.number("strength_threshold", cfg.screening.strength_threshold);
    require(cfg.screening.bandpass.width_nm >= 0.0, ErrorCode::Config,
            "screening.bandpass_width_nm must be non-negative");
    b.finish();
  }

  top.finish();
  return cfg;
}

ToolkitConfig load_config(const std::string& path) {
  const std::string text = csv::read_file(path);
  const auto dir = std::filesystem::path(path).parent_path();
  return parse_config(text, dir.empty() ? "." : dir.string());
}

}  // namespace csrs
