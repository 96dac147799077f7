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

#include "csrs/core_model.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "csrs/error.hpp"

namespace csrs {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

double sellmeier_n2_minus_1(const std::vector<SellmeierTerm>& terms, double lambda_nm) {
  require(lambda_nm > 0.0, ErrorCode::InvalidArgument, "wavelength must be positive");
  const double l2 = (lambda_nm * 1e-3) * (lambda_nm * 1e-3);
  double sum = 0.0;
  for (const auto& t : terms) {
    const double denom = l2 - t.c_um2;
    require(std::abs(denom) > 1e-12 * std::max(l2, std::abs(t.c_um2)), ErrorCode::Domain,
            "wavelength " + fmt(lambda_nm) + " nm is at a pole of the dispersion formula");
    sum += t.b * l2 / denom;
  }
  return sum;
}

WallIndexModel WallIndexModel::constant(double n) {
  require(n > 1.0, ErrorCode::InvalidArgument, "wall index must exceed 1");
  WallIndexModel m;
  m.constant_ = n;
  return m;
}

WallIndexModel WallIndexModel::sellmeier(std::vector<SellmeierTerm> terms) {
  require(!terms.empty(), ErrorCode::InvalidArgument, "wall Sellmeier model needs at least one term");
  WallIndexModel m;
  m.terms_ = std::move(terms);
  return m;
}

double WallIndexModel::at(double lambda_nm) const {
  if (terms_.empty()) return constant_;
  const double n2 = 1.0 + sellmeier_n2_minus_1(terms_, lambda_nm);
  require(n2 > 1.0, ErrorCode::Domain, "wall index model gives n <= 1 at " + fmt(lambda_nm) + " nm");
  return std::sqrt(n2);
}

void FiberGeometry::validate() const {
  require(core_radius_um > 0.0 && capillary_inner_radius_um > 0.0 && wall_thickness_um > 0.0,
          ErrorCode::InvalidArgument, "fiber lengths must be strictly positive");
  require(num_capillaries >= 3, ErrorCode::InvalidArgument, "fiber needs at least 3 capillaries");
  require(capillary_inner_radius_um < core_radius_um * num_capillaries, ErrorCode::InvalidArgument,
          "capillary radius is geometrically inconsistent with the core radius");
}

double touching_capillary_radius(double core_radius_um, int num_capillaries) {
  require(core_radius_um > 0.0 && num_capillaries >= 3, ErrorCode::InvalidArgument,
          "touching construction needs r_core > 0 and N >= 3");
  const double s = std::sin(kPi / num_capillaries);
  return core_radius_um * s / (1.0 - s);
}

void GasDispersion::validate() const {
  require(!refractivity.empty(), ErrorCode::InvalidArgument, "gas needs refractivity coefficients");
  require(reference_pressure_bar > 0.0 && reference_temperature_k > 0.0, ErrorCode::InvalidArgument,
          "gas reference conditions must be positive");
}

double relative_density(const GasDispersion& gas, double p_bar, double t_k) {
  require(p_bar >= 0.0, ErrorCode::InvalidArgument, "pressure must be non-negative");
  require(t_k > 0.0, ErrorCode::InvalidArgument, "temperature must be positive");
  if (p_bar == 0.0) return 0.0;
  const double z = gas.compressibility ? gas.compressibility(p_bar, t_k) : 1.0;
  require(z > 0.0, ErrorCode::Domain, "compressibility factor must be positive");
  return (p_bar / gas.reference_pressure_bar) * (gas.reference_temperature_k / t_k) / z;
}

double gas_index(const GasDispersion& gas, double lambda_nm, double p_bar, double t_k) {
  require(lambda_nm > 0.0, ErrorCode::InvalidArgument, "wavelength must be positive");
  const double rho = relative_density(gas, p_bar, t_k);
  if (rho == 0.0) return 1.0;
  const double n2 = 1.0 + rho * sellmeier_n2_minus_1(gas.refractivity, lambda_nm);
  require(n2 > 0.0 && std::isfinite(n2), ErrorCode::Domain, "gas index is not real at this wavelength");
  return std::sqrt(n2);
}

// ---------------------------------------------------------------------------
// Bessel zeros

double ModeLabel::bessel_zero() const { return csrs::bessel_zero(l, m); }

std::string ModeLabel::name() const { return "LP" + std::to_string(l) + std::to_string(m); }

namespace {

double compute_bessel_zero(int l, int m) {
  const double nu = l;
  auto j = [nu](double x) { return std::cyl_bessel_j(nu, x); };

  // Zeros of J_l are spaced by more than 2.5 for every supported order, so a
  // 0.25 step never skips a sign change.
  constexpr double step = 0.25;
  double x0 = 0.1;
  double f0 = j(x0);
  int found = 0;
  for (;;) {
    const double x1 = x0 + step;
    const double f1 = j(x1);
    if (std::signbit(f0) != std::signbit(f1)) {
      if (++found == m) {
        double a = x0, fa = f0, b = x1;
        while (b - a > 1e-15 * b) {
          const double mid = 0.5 * (a + b);
          const double fm = j(mid);
          if (fm == 0.0) return mid;
          if (std::signbit(fm) == std::signbit(fa)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        return 0.5 * (a + b);
      }
    }
    x0 = x1;
    f0 = f1;
  }
}

}  // namespace

double bessel_zero(int l, int m) {
  require(l >= 0 && l <= 5 && m >= 1 && m <= 5, ErrorCode::Range,
          "Bessel zero order (" + std::to_string(l) + "," + std::to_string(m) +
              ") outside supported range 0<=l<=5, 1<=m<=5");
  static const auto table = [] {
    std::array<std::array<double, 5>, 6> t{};
    for (int ll = 0; ll <= 5; ++ll)
      for (int mm = 1; mm <= 5; ++mm) t[ll][mm - 1] = compute_bessel_zero(ll, mm);
    return t;
  }();
  return table[l][m - 1];
}

// ---------------------------------------------------------------------------
// Mode indices

double marcatili_mode_index(double lambda_nm, double radius_um, const ModeLabel& mode) {
  require(lambda_nm > 0.0 && radius_um > 0.0, ErrorCode::InvalidArgument,
          "wavelength and radius must be positive");
  const double u = mode.bessel_zero() * (lambda_nm * 1e-3) / (2.0 * kPi * radius_um);
  return 1.0 - 0.5 * u * u;
}

std::vector<double> resonance_wavelengths(double wall_thickness_um, double n_wall, int m_max) {
  require(wall_thickness_um > 0.0 && n_wall > 1.0 && m_max >= 1, ErrorCode::InvalidArgument,
          "resonances need t > 0, n_wall > 1, m_max >= 1");
  const double first = 2.0 * wall_thickness_um * std::sqrt(n_wall * n_wall - 1.0);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) out.push_back(first / m);
  return out;
}

int transmission_window(double lambda_um, double wall_thickness_um, double n_wall) {
  require(lambda_um > 0.0, ErrorCode::InvalidArgument, "wavelength must be positive");
  const double first = 2.0 * wall_thickness_um * std::sqrt(n_wall * n_wall - 1.0);
  // λ_k < λ  <=>  k > first/λ
  return static_cast<int>(std::floor(first / lambda_um)) + 1;
}

const char* to_string(IndexModel model) {
  return model == IndexModel::Zeisberger ? "zeisberger" : "marcatili";
}

IndexModel index_model_from_string(const std::string& name) {
  if (name == "zeisberger") return IndexModel::Zeisberger;
  if (name == "marcatili") return IndexModel::Marcatili;
  fail(ErrorCode::InvalidArgument, "unknown index model '" + name + "' (zeisberger|marcatili)");
}

std::pair<double, int> nearest_resonance(const FiberGeometry& geom, double n_gas, double lambda_nm) {
  const double n_wall = geom.wall_index.at(lambda_nm);
  require(n_wall > n_gas, ErrorCode::Domain, "wall index must exceed the gas index");
  const double first = 2.0 * geom.wall_thickness_um * std::sqrt(n_wall * n_wall - n_gas * n_gas);
  const double lambda_um = lambda_nm * 1e-3;
  const int m = std::max(1, static_cast<int>(std::lround(first / lambda_um)));
  double best = first / m;
  int best_m = m;
  for (int k = std::max(1, m - 1); k <= m + 1; ++k) {
    const double lk = first / k;
    if (std::abs(lambda_um - lk) / lk < std::abs(lambda_um - best) / best) {
      best = lk;
      best_m = k;
    }
  }
  return {best, best_m};
}

double zeisberger_wall_term(const FiberGeometry& geom, double n_gas, double lambda_nm,
                            const ModeLabel& mode) {
  const double k0 = 2.0 * kPi / (lambda_nm * 1e-3);  // 1/µm
  const double r = geom.core_radius_um;
  const double n_wall = geom.wall_index.at(lambda_nm);
  const double eps = (n_wall * n_wall) / (n_gas * n_gas);
  const double phi = k0 * geom.wall_thickness_um * std::sqrt(n_wall * n_wall - n_gas * n_gas);
  const double j = mode.bessel_zero();
  const double cot = std::cos(phi) / std::sin(phi);
  return -(j * j) / (k0 * k0 * k0 * n_gas * n_gas * r * r * r) * cot / std::sqrt(eps - 1.0) *
         (eps + 1.0) / 2.0;
}

double effective_core_index(const FiberGeometry& geom, const GasDispersion& gas, double lambda_nm,
                            double p_bar, double t_k, const ModeLabel& mode,
                            const IndexModelOptions& options) {
  require(lambda_nm > 0.0, ErrorCode::InvalidArgument, "wavelength must be positive");
  const double n_gas = gas_index(gas, lambda_nm, p_bar, t_k);
  const double k0 = 2.0 * kPi / (lambda_nm * 1e-3);
  const double u = mode.bessel_zero() / (k0 * geom.core_radius_um);
  const double n = n_gas - 0.5 * u * u / n_gas;
  if (options.model == IndexModel::Marcatili) return n;

  const auto [res_um, order] = nearest_resonance(geom, n_gas, lambda_nm);
  const double rel = std::abs(lambda_nm * 1e-3 - res_um) / res_um;
  if (rel <= options.resonance_exclusion) {
    fail(ErrorCode::ResonanceProximity,
         fmt(lambda_nm) + " nm lies within " + fmt(100.0 * rel) + "% of wall resonance m=" +
             std::to_string(order) + " at " + fmt(res_um * 1e3) + " nm (p = " + fmt(p_bar) +
             " bar); exclusion band is " + fmt(100.0 * options.resonance_exclusion) + "%");
  }
  return n + zeisberger_wall_term(geom, n_gas, lambda_nm, mode);
}

}  // namespace csrs
