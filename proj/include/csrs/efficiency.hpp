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

// Conversion efficiency in the undepleted-pump regime,
//   η = C · P_pump1 · P_pump2 · L² · sinc²(Δβ L / 2) · (loss correction),
// with C the lumped coefficient in %/(W²·m²).

#include <string>

namespace csrs {

struct LightField {
  double wavelength_nm = 0.0;
  double power_w = 0.0;
  double alpha_db_per_m = 0.0;
  double incoupling = 1.0;

  void validate() const;
  /// Power launched into the fiber.
  double coupled_power_w() const { return power_w * incoupling; }
};

struct ConversionFields {
  LightField pump1;
  LightField pump2;
  LightField probe;
};

enum class LossVariant { Lossless, LumpedExponential, AmplitudeIntegral };

const char* to_string(LossVariant v);
LossVariant loss_variant_from_string(const std::string& name);

struct EfficiencyModel {
  double c_percent_per_w2m2 = 0.0044;
  LossVariant variant = LossVariant::LumpedExponential;
  double alpha_signal_db_per_m = 0.0;

  void validate() const;
};

/// dB/m (power) to 1/m.
double alpha_linear(double alpha_db_per_m);

/// 1/m to dB/m.
double alpha_db(double alpha_per_m);

/// Internal conversion efficiency as a fraction (not %). Only the pump powers
/// enter; each is scaled by its incoupling efficiency. Values above 1 are
/// returned unclamped, see exceeds_undepleted_limit().
double predicted_efficiency(const EfficiencyModel& model, const ConversionFields& fields,
                            double length_m, double sinc_factor = 1.0);

/// True when η > 1, i.e. the undepleted-pump model no longer applies.
inline bool exceeds_undepleted_limit(double efficiency) { return efficiency > 1.0; }

/// predicted_efficiency at the given pump powers (sinc² = 1).
double max_power_efficiency(const EfficiencyModel& model, const ConversionFields& fields,
                            double pump1_power_w, double pump2_power_w, double length_m);

struct OptimalLength {
  double length_m = 0.0;
  double efficiency = 0.0;
};

/// Maximiser of η(L) on [1 mm, 1 km] by golden-section search. Throws
/// Unbounded when η has no interior maximum there (e.g. no attenuation).
OptimalLength optimal_length(const EfficiencyModel& model, const ConversionFields& fields,
                             double l_min_m = 1e-3, double l_max_m = 1e3);

/// Total linear attenuation α1 + α2 + αprobe + αsignal, 1/m.
double total_alpha_linear(const EfficiencyModel& model, const ConversionFields& fields);

/// Closed-form optimum 2/Σα of the lumped-exponential variant.
double lumped_optimal_length(double total_alpha_per_m);

/// Attenuation bookkeeping implied by a fitted per-W² efficiency at a single
/// length against the lossless coefficient C:
///   exp(−Σα·L) = η_per_W² / (C · L²).
struct LossConsistency {
  double transmission_ratio = 0.0;  // η_per_W² / (C L²)
  double total_alpha_db_per_m = 0.0;
  double measured_alpha_db_per_m = 0.0;  // α_pump1 + α_pump2 + α_probe
  double alpha_signal_db_per_m = 0.0;    // the remainder
};

LossConsistency loss_consistency(double c_percent_per_w2m2, double eta_percent_per_w2,
                                 double length_m, double alpha_pump1_db, double alpha_pump2_db,
                                 double alpha_probe_db);

}  // namespace csrs
