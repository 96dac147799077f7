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

// Propagation constants, four-wave phase mismatch and the pressure at which
// it vanishes.
//
// Field naming: pump1 is the long-wavelength pump, pump2 the short one. The
// signal is generated at ω_s = ω_probe − (ω_pump2 − ω_pump1), so the momentum
// balance reads Δβ = β_pump1 − β_pump2 + β_probe − β_signal.

#include "csrs/core_model.hpp"

namespace csrs {

/// Vacuum wavenumber in cm⁻¹ for a vacuum wavelength in nm.
inline double wavenumber_cm1(double lambda_nm) { return 1e7 / lambda_nm; }

/// Signal wavelength from wavenumber conservation
/// 1/λ_s = 1/λ_probe − 1/λ_pump2 + 1/λ_pump1.
double signal_wavelength(double probe_nm, double pump1_nm, double pump2_nm);

/// Pump beat frequency c·(1/λ_pump2 − 1/λ_pump1) in THz.
double raman_beat_thz(double pump1_nm, double pump2_nm);

struct FieldModes {
  ModeLabel pump1{0, 1};
  ModeLabel pump2{0, 1};
  ModeLabel probe{0, 1};
  ModeLabel signal{0, 1};
};

struct ConversionScheme {
  double pump1_nm = 0.0;
  double pump2_nm = 0.0;
  double probe_nm = 0.0;
  double signal_nm = 0.0;
  double raman_shift_cm1 = 0.0;
  FieldModes modes;

  /// Builds a scheme with the signal derived from the pumps and checks the
  /// pump beat against raman_shift within the detuning tolerance.
  static ConversionScheme make(double pump1_nm, double pump2_nm, double probe_nm,
                               double raman_shift_cm1, double detuning_tolerance_cm1 = 5.0);

  /// Pump beat minus raman_shift, cm⁻¹.
  double detuning_cm1() const;
};

/// Everything the effective-index model needs besides wavelength, pressure
/// and mode.
struct FiberSetup {
  FiberGeometry geometry;
  GasDispersion gas;
  double temperature_k = 293.0;
  IndexModelOptions index;
};

/// β = (2π/λ)·n_eff in rad/m.
double propagation_constant(const FiberSetup& setup, double lambda_nm, double p_bar,
                            const ModeLabel& mode);

double delta_beta(const FiberSetup& setup, const ConversionScheme& scheme, double p_bar);

struct OptimalPressure {
  double pressure_bar = 0.0;
  double residual_rad_per_m = 0.0;
  int iterations = 0;
};

inline constexpr double kDeltaBetaTolerance = 1e-6;  // rad/m

/// Root of Δβ(p) inside [p_lo, p_hi]. Throws NoRoot (message carries the
/// endpoint values) when the bracket has no sign change.
OptimalPressure optimal_pressure(const FiberSetup& setup, const ConversionScheme& scheme,
                                 double p_lo, double p_hi,
                                 double tolerance = kDeltaBetaTolerance);

/// sinc²(Δβ·L/2), with sinc(0) = 1.
double phase_matching_factor(double delta_beta_rad_per_m, double length_m);

struct PressureAcceptance {
  double lower_bar = 0.0;
  double upper_bar = 0.0;
  double width_bar() const { return upper_bar - lower_bar; }
};

/// Pressure interval around p_opt on which sinc² >= 1/2, found by stepping
/// outward and refining each crossing. Throws Unbounded when a crossing is
/// not found within p_opt ± scan_half_range_bar (or before p = 0).
PressureAcceptance pressure_acceptance(const FiberSetup& setup, const ConversionScheme& scheme,
                                       double length_m, double p_opt,
                                       double scan_half_range_bar = 100.0,
                                       double step_bar = 0.05);

struct WallThicknessEstimate {
  double wall_thickness_um = 0.0;
  double achieved_pressure_bar = 0.0;
  double pressure_residual_bar = 0.0;
};

/// Wall thickness t for which optimal_pressure(t) equals the measured value.
/// setup.geometry.wall_thickness_um is ignored.
WallThicknessEstimate infer_wall_thickness(double measured_p_opt_bar, const FiberSetup& setup,
                                           const ConversionScheme& scheme, double t_lo_um,
                                           double t_hi_um, double p_lo, double p_hi);

}  // namespace csrs
