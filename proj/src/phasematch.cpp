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

#include "csrs/phasematch.hpp"

#include <cmath>
#include <sstream>

#include "csrs/error.hpp"
#include "csrs/numerics.hpp"

namespace csrs {

namespace {

std::string fmt(double v, int precision = 8) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

}  // namespace

double signal_wavelength(double probe_nm, double pump1_nm, double pump2_nm) {
  require(probe_nm > 0.0 && pump1_nm > 0.0 && pump2_nm > 0.0, ErrorCode::InvalidArgument,
          "wavelengths must be positive");
  require(pump2_nm <= pump1_nm, ErrorCode::InfeasibleScheme,
          "pump2 must be the short-wavelength pump (pump2 <= pump1)");
  if (pump1_nm == pump2_nm) return probe_nm;
  // Written relative to pump1 so that probe == pump2 yields pump1 bit-exactly.
  const double scale = 1.0 + pump1_nm * (pump2_nm - probe_nm) / (probe_nm * pump2_nm);
  require(scale > 0.0, ErrorCode::InfeasibleScheme,
          "probe wavenumber is smaller than the pump beat; the signal would have non-positive "
          "wavenumber");
  return pump1_nm / scale;
}

double raman_beat_thz(double pump1_nm, double pump2_nm) {
  require(pump1_nm > 0.0 && pump2_nm > 0.0, ErrorCode::InvalidArgument, "wavelengths must be positive");
  return kSpeedOfLight * (1.0 / (pump2_nm * 1e-9) - 1.0 / (pump1_nm * 1e-9)) * 1e-12;
}

ConversionScheme ConversionScheme::make(double pump1_nm, double pump2_nm, double probe_nm,
                                        double raman_shift_cm1, double detuning_tolerance_cm1) {
  ConversionScheme s;
  s.pump1_nm = pump1_nm;
  s.pump2_nm = pump2_nm;
  s.probe_nm = probe_nm;
  s.raman_shift_cm1 = raman_shift_cm1;
  s.signal_nm = signal_wavelength(probe_nm, pump1_nm, pump2_nm);
  require(s.signal_nm > probe_nm || pump1_nm == pump2_nm, ErrorCode::InfeasibleScheme,
          "signal must lie on the long-wavelength side of the probe");
  require(std::abs(s.detuning_cm1()) <= detuning_tolerance_cm1, ErrorCode::InfeasibleScheme,
          "pump beat " + fmt(wavenumber_cm1(pump2_nm) - wavenumber_cm1(pump1_nm)) +
              " cm^-1 is detuned by " + fmt(s.detuning_cm1()) + " cm^-1 from the Raman shift " +
              fmt(raman_shift_cm1) + " cm^-1 (tolerance " + fmt(detuning_tolerance_cm1) + ")");
  return s;
}

double ConversionScheme::detuning_cm1() const {
  return (wavenumber_cm1(pump2_nm) - wavenumber_cm1(pump1_nm)) - raman_shift_cm1;
}

double propagation_constant(const FiberSetup& setup, double lambda_nm, double p_bar,
                            const ModeLabel& mode) {
  const double n_eff =
      effective_core_index(setup.geometry, setup.gas, lambda_nm, p_bar, setup.temperature_k, mode,
                           setup.index);
  return 2.0 * kPi / (lambda_nm * 1e-9) * n_eff;
}

double delta_beta(const FiberSetup& setup, const ConversionScheme& scheme, double p_bar) {
  const auto& m = scheme.modes;
  // Grouped so that a scheme with probe == pump2 (signal == pump1) cancels exactly.
  return (propagation_constant(setup, scheme.pump1_nm, p_bar, m.pump1) -
          propagation_constant(setup, scheme.signal_nm, p_bar, m.signal)) +
         (propagation_constant(setup, scheme.probe_nm, p_bar, m.probe) -
          propagation_constant(setup, scheme.pump2_nm, p_bar, m.pump2));
}

OptimalPressure optimal_pressure(const FiberSetup& setup, const ConversionScheme& scheme,
                                 double p_lo, double p_hi, double tolerance) {
  require(p_lo >= 0.0 && p_hi > p_lo, ErrorCode::InvalidArgument,
          "pressure bracket must satisfy 0 <= p_lo < p_hi");
  auto f = [&](double p) { return delta_beta(setup, scheme, p); };
  const double f_lo = f(p_lo);
  const double f_hi = f(p_hi);
  const bool both_zero = f_lo == 0.0 && f_hi == 0.0;
  if (both_zero || (f_lo != 0.0 && f_hi != 0.0 && std::signbit(f_lo) == std::signbit(f_hi))) {
    fail(ErrorCode::NoRoot, "no sign change of delta-beta in [" + fmt(p_lo) + ", " + fmt(p_hi) +
                                "] bar: delta-beta(" + fmt(p_lo) + ") = " + fmt(f_lo) +
                                " rad/m, delta-beta(" + fmt(p_hi) + ") = " + fmt(f_hi) + " rad/m");
  }
  const auto r = numerics::find_root(f, p_lo, f_lo, p_hi, f_hi, tolerance, 1e-12 * p_hi, 300);
  require(std::abs(r.fx) <= tolerance, ErrorCode::NotConverged,
          "optimal pressure residual " + fmt(r.fx) + " rad/m above tolerance");
  return {r.x, r.fx, r.iterations};
}

double phase_matching_factor(double delta_beta_rad_per_m, double length_m) {
  require(length_m > 0.0, ErrorCode::InvalidArgument, "length must be positive");
  const double x = 0.5 * delta_beta_rad_per_m * length_m;
  if (x == 0.0) return 1.0;
  const double s = std::sin(x) / x;
  return s * s;
}

PressureAcceptance pressure_acceptance(const FiberSetup& setup, const ConversionScheme& scheme,
                                       double length_m, double p_opt, double scan_half_range_bar,
                                       double step_bar) {
  require(length_m > 0.0 && step_bar > 0.0 && scan_half_range_bar > 0.0, ErrorCode::InvalidArgument,
          "acceptance scan needs positive length, step and range");
  auto excess = [&](double p) {
    return phase_matching_factor(delta_beta(setup, scheme, p), length_m) - 0.5;
  };

  auto crossing = [&](double direction) {
    double prev = p_opt;
    for (int k = 1;; ++k) {
      double p = p_opt + direction * k * step_bar;
      const double travelled = std::abs(p - p_opt);
      if (travelled > scan_half_range_bar || p < 0.0) {
        fail(ErrorCode::Unbounded,
             "sinc^2 stays above 1/2 over the whole scan range (" + fmt(scan_half_range_bar) +
                 " bar each side of " + fmt(p_opt) + " bar)");
      }
      double value;
      try {
        value = excess(p);
      } catch (const Error& e) {
        fail(ErrorCode::Unbounded, std::string("acceptance scan left the valid model range: ") + e.what());
      }
      if (value < 0.0) {
        return numerics::find_root(excess, prev, p, 1e-12, 1e-9).x;
      }
      prev = p;
    }
  };

  PressureAcceptance out;
  out.lower_bar = crossing(-1.0);
  out.upper_bar = crossing(+1.0);
  return out;
}

WallThicknessEstimate infer_wall_thickness(double measured_p_opt_bar, const FiberSetup& setup,
                                           const ConversionScheme& scheme, double t_lo_um,
                                           double t_hi_um, double p_lo, double p_hi) {
  require(t_lo_um > 0.0 && t_hi_um > t_lo_um, ErrorCode::InvalidArgument,
          "wall-thickness bracket must satisfy 0 < t_lo < t_hi");
  auto p_opt_at = [&](double t) {
    FiberSetup s = setup;
    s.geometry.wall_thickness_um = t;
    return optimal_pressure(s, scheme, p_lo, p_hi).pressure_bar;
  };
  double p_at_lo = 0.0, p_at_hi = 0.0;
  try {
    p_at_lo = p_opt_at(t_lo_um);
    p_at_hi = p_opt_at(t_hi_um);
  } catch (const Error& e) {
    fail(ErrorCode::NoRoot, std::string("optimal pressure not solvable at a wall-thickness bracket "
                                        "endpoint: ") + e.what());
  }
  const double g_lo = p_at_lo - measured_p_opt_bar;
  const double g_hi = p_at_hi - measured_p_opt_bar;
  if (g_lo != 0.0 && g_hi != 0.0 && std::signbit(g_lo) == std::signbit(g_hi)) {
    fail(ErrorCode::NoRoot, "measured optimal pressure " + fmt(measured_p_opt_bar) +
                                " bar is not bracketed: p_opt(" + fmt(t_lo_um) + " um) = " +
                                fmt(p_at_lo) + " bar, p_opt(" + fmt(t_hi_um) + " um) = " +
                                fmt(p_at_hi) + " bar");
  }
  auto g = [&](double t) { return p_opt_at(t) - measured_p_opt_bar; };
  const auto r = numerics::find_root(g, t_lo_um, g_lo, t_hi_um, g_hi, 1e-9, 1e-10, 200);
  return {r.x, r.fx + measured_p_opt_bar, r.fx};
}

}  // namespace csrs
