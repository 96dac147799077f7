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

#pragma once

// Toolkit configuration: a YAML key-value tree with the blocks
//   fiber, gas, scheme, phase_match, fields, efficiency, projection, bend,
//   screening
// fiber, gas and scheme are required. Unknown keys are rejected with their
// full key path.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csrs/bendloss.hpp"
#include "csrs/efficiency.hpp"
#include "csrs/phasematch.hpp"
#include "csrs/raman_screen.hpp"

namespace csrs {

/// `start:stop:count` sweep specification.
struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  static SweepRange parse(std::string_view text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct EfficiencyReferences {
  /// Fitted efficiency per W² at fit_length_m, %/W².
  std::optional<double> fitted_eta_percent_per_w2;
  double fit_length_m = 1.85;
  /// Reference efficiency at the maximum available pump powers, %.
  std::optional<double> max_power_efficiency_percent;
  double max_pump1_power_w = 0.0;
  double max_pump2_power_w = 0.0;
  /// Lossless projection at other pump powers and fit_length_m, with its
  /// reference value in %.
  std::optional<double> theoretical_efficiency_percent;
  double theoretical_pump1_power_w = 0.0;
  double theoretical_pump2_power_w = 0.0;
};

/// Extrapolation to a low-loss fiber: one attenuation for every field and a
/// common incoupling efficiency.
struct ProjectionScenario {
  double pump1_power_w = 0.0;
  double pump2_power_w = 0.0;
  double attenuation_db_per_km = 0.0;
  double incoupling = 1.0;
  std::optional<double> reference_optimum_length_m;
  std::optional<double> reference_efficiency;  // fraction
};

struct BendSettings {
  double wavelength_nm = 0.0;  // defaults to the probe
  std::vector<ModeLabel> modes{{0, 1}, {1, 1}};
  std::vector<ModePairing> pairings{{{0, 1}, {1, 1}}};
  SweepRange radius_sweep{0.02, 0.6, 59};
  std::optional<EmpiricalCutoff> lp01_cutoff;
  BendAlignment alignment = BendAlignment::WorstCase;
  double azimuth_rad = 0.0;
};

struct ScreeningSettings {
  std::string catalog_path;  // resolved against the config file's directory
  BandpassFilter bandpass;
  double strength_threshold = 1e-2;
};

struct ToolkitConfig {
  FiberSetup setup;
  bool capillary_radius_derived = false;

  double pump1_nm = 0.0;
  double pump2_nm = 0.0;
  double probe_nm = 0.0;
  double raman_shift_cm1 = 0.0;
  double detuning_tolerance_cm1 = 5.0;
  FieldModes modes;

  double bracket_lo_bar = 1.0;
  double bracket_hi_bar = 200.0;
  double interaction_length_m = 1.0;
  SweepRange pressure_sweep{0.0, 200.0, 201};
  double acceptance_scan_bar = 100.0;

  ConversionFields fields;
  std::optional<double> incoupling_override;

  EfficiencyModel model;
  SweepRange length_sweep{0.05, 2.0, 40};
  EfficiencyReferences references;
  std::optional<ProjectionScenario> projection;

  BendSettings bend;
  ScreeningSettings screening;

  std::uint64_t seed = 0;

  ConversionScheme scheme() const;
  /// Fields with the aggregate incoupling override applied to every beam.
  ConversionFields effective_fields() const;

  /// Canonical `key = value` listing, one per line, fixed order.
  std::string normalized() const;
  /// 16 hex digit FNV-1a digest of normalized().
  std::string digest() const;
};

/// Parses YAML text; relative catalog paths resolve against base_dir.
ToolkitConfig parse_config(std::string_view yaml_text, const std::string& base_dir = ".");
ToolkitConfig load_config(const std::string& path);

}  // namespace csrs
