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

// Resonant bend loss: the bend radius at which a core mode becomes index
// matched to a capillary mode, and which core modes survive a given bend.

#include <optional>
#include <vector>

#include "csrs/core_model.hpp"

namespace csrs {

enum class BendAlignment { WorstCase, AngleResolved };

struct BendConfiguration {
  double bend_radius_m = 0.0;
  BendAlignment alignment = BendAlignment::WorstCase;
  /// Angle between the bend plane and the first capillary, radians. Used only
  /// for AngleResolved.
  double azimuth_rad = 0.0;
};

/// Distance d between the core centre and a capillary centre projected on the
/// bend plane, µm. Wall thickness is neglected (thin wall).
double capillary_center_distance(const FiberGeometry& geom,
                                 BendAlignment alignment = BendAlignment::WorstCase,
                                 double azimuth_rad = 0.0);

/// R = d / (√(n_core/n_clad) − 1) in metres, with n_core the Marcatili index
/// of the core mode and n_clad that of the capillary mode. Throws NoResonance
/// when n_core <= n_clad.
double critical_bend_radius(const FiberGeometry& geom, double lambda_nm, const ModeLabel& core_mode,
                            const ModeLabel& clad_mode,
                            BendAlignment alignment = BendAlignment::WorstCase,
                            double azimuth_rad = 0.0);

/// A core mode paired with the capillary mode it can couple to.
struct ModePairing {
  ModeLabel core{0, 1};
  ModeLabel cladding{1, 1};
};

struct PairingResult {
  ModePairing pairing;
  /// Empty when the pair has no resonance (n_core <= n_clad).
  std::optional<double> critical_radius_m;
  bool bend_below_critical = false;
};

/// Measured bend radius below which the fundamental mode was not observed.
struct EmpiricalCutoff {
  double radius_m = 0.10;
  double uncertainty_m = 0.01;
};

struct ModeAccessibility {
  ModeLabel mode;
  bool suppressed = false;
  /// Largest critical radius among this mode's pairings, if any.
  std::optional<double> largest_critical_radius_m;
  std::vector<PairingResult> pairings;
  /// Set for LP01 when an empirical cutoff was supplied: whether the bend is
  /// below it. Reported alongside, never folded into `suppressed`.
  std::optional<bool> below_empirical_cutoff;
};

/// Per-mode flags: a core mode is suppressed when the bend radius is below the
/// largest critical radius of its configured pairings. Modes without a
/// resonant pairing stay accessible.
std::vector<ModeAccessibility> mode_accessibility(const FiberGeometry& geom, double lambda_nm,
                                                  const BendConfiguration& bend,
                                                  const std::vector<ModeLabel>& modes,
                                                  const std::vector<ModePairing>& pairings,
                                                  std::optional<EmpiricalCutoff> lp01_cutoff = {});

}  // namespace csrs
