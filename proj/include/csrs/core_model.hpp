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

// Refractive-index physics: gas dispersion under pressure and the effective
// index of the leaky core modes of a tube-type anti-resonant hollow-core fiber.
//
// Units used throughout: wavelengths in nm, fiber lengths in µm,
// pressure in bar, temperature in K.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csrs {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Two-term (or n-term) Sellmeier form n² − 1 = Σ B_i λ² / (λ² − C_i),
/// λ in µm and C_i in µm².
struct SellmeierTerm {
  double b = 0.0;
  double c_um2 = 0.0;
};

double sellmeier_n2_minus_1(const std::vector<SellmeierTerm>& terms, double lambda_nm);

/// Capillary glass index: a single constant or a Sellmeier dispersion.
class WallIndexModel {
 public:
  WallIndexModel() = default;
  static WallIndexModel constant(double n);
  static WallIndexModel sellmeier(std::vector<SellmeierTerm> terms);

  double at(double lambda_nm) const;
  bool is_constant() const { return terms_.empty(); }
  double constant_value() const { return constant_; }
  const std::vector<SellmeierTerm>& terms() const { return terms_; }

 private:
  double constant_ = 1.444;
  std::vector<SellmeierTerm> terms_;
};

struct FiberGeometry {
  double core_radius_um = 23.0;
  double capillary_inner_radius_um = 18.3;
  double wall_thickness_um = 1.28;
  int num_capillaries = 7;
  WallIndexModel wall_index;

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;
};

/// Radius of N mutually tangent capillaries inscribing a core of the given
/// radius: r_cap = r_core·sin(π/N) / (1 − sin(π/N)).
double touching_capillary_radius(double core_radius_um, int num_capillaries);

/// Compressibility factor Z(p, T). An empty function means an ideal gas.
using Compressibility = std::function<double(double p_bar, double t_k)>;

struct GasDispersion {
  std::string species = "H2";
  std::vector<SellmeierTerm> refractivity;
  double reference_pressure_bar = 1.01325;
  double reference_temperature_k = 273.15;
  Compressibility compressibility;

  void validate() const;
};

/// Density relative to the reference state, ρ = (p/p_ref)(T_ref/T)/Z.
double relative_density(const GasDispersion& gas, double p_bar, double t_k);

/// LP_{l,m} mode label.
struct ModeLabel {
  int l = 0;
  int m = 1;

  double bessel_zero() const;
  std::string name() const;  // "LP01", "LP11", ...
  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
};

/// m-th positive zero of J_l, for 0 <= l <= 5 and 1 <= m <= 5.
double bessel_zero(int l, int m);

double gas_index(const GasDispersion& gas, double lambda_nm, double p_bar, double t_k);

/// Marcatili capillary mode index n = 1 − ½ (j_{l,m} λ / 2πr)².
double marcatili_mode_index(double lambda_nm, double radius_um, const ModeLabel& mode);

/// Wall resonances λ_m = (2t/m)·√(n_wall² − 1), m = 1..m_max, in µm
/// (descending).
std::vector<double> resonance_wavelengths(double wall_thickness_um, double n_wall, int m_max);

/// Transmission window index: k when λ_{k} < λ < λ_{k-1} (λ_0 = ∞). Window 1
/// lies above the fundamental resonance.
int transmission_window(double lambda_um, double wall_thickness_um, double n_wall);

enum class IndexModel { Zeisberger, Marcatili };

const char* to_string(IndexModel model);
IndexModel index_model_from_string(const std::string& name);

struct IndexModelOptions {
  IndexModel model = IndexModel::Zeisberger;
  /// Relative half-width of the guard band around each wall resonance.
  double resonance_exclusion = 0.03;
};

/// Effective index of a leaky core mode, including the gas fill. The
/// Zeisberger variant adds the anti-resonant wall correction; the Marcatili
/// variant omits it.
double effective_core_index(const FiberGeometry& geom, const GasDispersion& gas, double lambda_nm,
                            double p_bar, double t_k, const ModeLabel& mode,
                            const IndexModelOptions& options = {});

/// The wall-correction term alone (zero for Marcatili), without the guard band
/// check.
double zeisberger_wall_term(const FiberGeometry& geom, double n_gas, double lambda_nm,
                            const ModeLabel& mode);

/// Nearest wall resonance (µm) at the given gas index, and its order.
std::pair<double, int> nearest_resonance(const FiberGeometry& geom, double n_gas,
                                         double lambda_nm);

}  // namespace csrs
