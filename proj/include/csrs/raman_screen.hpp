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

// Screening of parasitic Stokes / anti-Stokes channels: which catalog lines
// shift one of the strong fields into the signal bandpass.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csrs/efficiency.hpp"

namespace csrs {

/// Rotational branch, with ΔJ = J_lower − J_upper: O (+2), Q (0), S (−2).
enum class Branch { O, Q, S };

const char* to_string(Branch b);

struct RamanLine {
  double nu0_cm1 = 0.0;
  double e_lower_cm1 = 0.0;
  double rel_strength = 0.0;  // relative to the driven Q1(1) line
  std::string band;           // "v'-v", e.g. "1-0"
  Branch branch = Branch::Q;
  int j_lower = 0;

  /// "1-0 O(2)"
  std::string label() const;
};

struct CatalogDiagnostic {
  int line = 0;
  std::string message;
};

struct Catalog {
  std::vector<RamanLine> lines;
  std::vector<CatalogDiagnostic> diagnostics;
};

/// Header (exact column set, in this order):
///   nu0_cm1, e_lower_cm1, rel_strength, band, branch, j_lower
/// Malformed rows are skipped and reported with their line number. A missing
/// header or missing column throws Parse.
Catalog parse_catalog(std::string_view text);
Catalog load_catalog(const std::string& path);

struct ShiftedWavelengths {
  std::optional<double> stokes_nm;  // empty when 1/λ − ν̃ <= 0
  double anti_stokes_nm = 0.0;
};

ShiftedWavelengths shifted_wavelengths(double pump_nm, double nu0_cm1);

struct BandpassFilter {
  double center_nm = 1474.0;
  double width_nm = 25.0;  // full width

  bool contains(double lambda_nm) const {
    return lambda_nm >= center_nm - width_nm / 2.0 && lambda_nm <= center_nm + width_nm / 2.0;
  }
};

enum class ShiftDirection { Stokes, AntiStokes };

const char* to_string(ShiftDirection d);

struct ScreenFlag {
  std::string field;  // "pump1", "pump2", ..., "probe"
  double field_nm = 0.0;
  RamanLine line;
  ShiftDirection direction = ShiftDirection::Stokes;
  double landing_nm = 0.0;
  double offset_from_center_nm = 0.0;
  /// Energy of the molecular state the process starts from. Anti-Stokes
  /// channels need thermal population there; no Boltzmann weight is applied.
  double initial_state_energy_cm1 = 0.0;
};

struct ScreenOptions {
  double strength_threshold = 1e-2;
  /// The probe's Stokes channel through the driven transition is the
  /// conversion itself, not background. Lines within the tolerance of this
  /// shift are skipped for the probe.
  std::optional<double> driven_shift_cm1;
  double driven_tolerance_cm1 = 5.0;
};

/// Flags sorted by relative strength (descending), then transition
/// wavenumber (ascending). Pumps are named pump1, pump2, ... in input order.
std::vector<ScreenFlag> screen(const std::vector<LightField>& pumps,
                               const std::optional<LightField>& probe,
                               const std::vector<RamanLine>& catalog, const BandpassFilter& bandpass,
                               const ScreenOptions& options = {});

}  // namespace csrs
