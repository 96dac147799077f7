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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "csrs/error.hpp"
#include "csrs/phasematch.hpp"
#include "test_support.hpp"

namespace csrs {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

TEST(SignalWavelength, ReferenceScheme) {
  EXPECT_NEAR(signal_wavelength(914.0, 1550.0, 942.0), 1475.6182081, 1e-6);
}

TEST(SignalWavelength, DegenerateCases) {
  EXPECT_EQ(signal_wavelength(914.0, 1550.0, 1550.0), 914.0);
  EXPECT_EQ(signal_wavelength(942.0, 1550.0, 942.0), 1550.0);
}

TEST(SignalWavelength, InfeasibleSchemes) {
  EXPECT_EQ(code_of([] { signal_wavelength(914.0, 942.0, 1550.0); }), ErrorCode::InfeasibleScheme);
  // Probe wavenumber below the pump beat.
  EXPECT_EQ(code_of([] { signal_wavelength(3000.0, 1550.0, 942.0); }), ErrorCode::InfeasibleScheme);
  EXPECT_EQ(code_of([] { signal_wavelength(-1.0, 1550.0, 942.0); }), ErrorCode::InvalidArgument);
}

TEST(SignalWavelengthProperty, WavenumberConservation) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(600.0, 1000.0), w(800.0, 1000.0), v(1000.0, 2000.0);
  for (int i = 0; i < 1000; ++i) {
    const double p1 = v(rng), p2 = w(rng), probe = u(rng);
    const double s = signal_wavelength(probe, p1, p2);
    const double lhs = 1.0 / p1 + 1.0 / probe, rhs = 1.0 / p2 + 1.0 / s;
    EXPECT_NEAR(lhs, rhs, 4e-16 * lhs);
  }
}

TEST(RamanBeat, Values) {
  EXPECT_NEAR(raman_beat_thz(1550.0, 942.0), 124.8365, 1e-3);
  EXPECT_EQ(raman_beat_thz(1000.0, 1000.0), 0.0);
  EXPECT_NEAR(raman_beat_thz(1550.0, 775.0), kSpeedOfLight / 1550e-9 * 1e-12, 1e-9);
}

TEST(ConversionScheme, DetuningTolerance) {
  const auto s = test::reference_scheme();
  EXPECT_NEAR(s.detuning_cm1(), 8.848349, 1e-5);
  EXPECT_EQ(code_of([] { ConversionScheme::make(1550.0, 942.0, 914.0, 4155.25, 5.0); }),
            ErrorCode::InfeasibleScheme);
}

TEST(PropagationConstant, VacuumLimit) {
  auto s = test::reference_setup(IndexModel::Marcatili);
  s.geometry.core_radius_um = 1e12;
  for (double lam : {500.0, 914.0, 1550.0}) {
    const double b = propagation_constant(s, lam, 0.0, {0, 1});
    EXPECT_NEAR(b / (2.0 * kPi / (lam * 1e-9)), 1.0, 1e-15);
  }
}

TEST(PropagationConstant, CompositionalOracle) {
  auto s = test::reference_setup();
  const double n = effective_core_index(s.geometry, s.gas, 1550.0, 50.0, 293.0, {0, 1}, s.index);
  EXPECT_DOUBLE_EQ(propagation_constant(s, 1550.0, 50.0, {0, 1}), 2.0 * kPi / 1550e-9 * n);
}

TEST(PropagationConstant, IncreasesWithPressure) {
  auto s = test::reference_setup();
  double prev = 0.0;
  for (double p = 40.0; p <= 150.0; p += 2.5) {  // below ~35 bar 914 nm sits in the guard band
    const double b = propagation_constant(s, 914.0, p, {0, 1});
    EXPECT_GT(b, prev);
    prev = b;
  }
}

TEST(DeltaBeta, DegenerateSchemeCancelsExactly) {
  const double shift = wavenumber_cm1(942.0) - wavenumber_cm1(1550.0);
  const auto scheme = ConversionScheme::make(1550.0, 942.0, 942.0, shift);
  EXPECT_EQ(scheme.signal_nm, 1550.0);
  auto s = test::reference_setup();
  for (double p : {0.0, 30.0, 90.0}) EXPECT_EQ(delta_beta(s, scheme, p), 0.0);
  EXPECT_EQ(code_of([&] { optimal_pressure(s, scheme, 10.0, 150.0); }), ErrorCode::NoRoot);
}

TEST(DeltaBetaProperty, PairwiseEqualWavelengthsCancel) {
  auto s = test::reference_setup(IndexModel::Marcatili);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> shortw(600.0, 1000.0), longw(1100.0, 2000.0), p(0.0, 150.0);
  for (int i = 0; i < 200; ++i) {
    const double a = longw(rng), b = shortw(rng);
    const auto scheme = ConversionScheme::make(a, b, b, wavenumber_cm1(b) - wavenumber_cm1(a));
    EXPECT_EQ(delta_beta(s, scheme, p(rng)), 0.0);
  }
}

TEST(DeltaBeta, VacuumMarcatiliClosedForm) {
  auto s = test::reference_setup(IndexModel::Marcatili);
  const auto scheme = test::reference_scheme();
  auto beta = [&](double lam) {
    const double u = 2.404825557695773 * lam * 1e-3 / (2.0 * kPi * 23.0);
    return 2.0 * kPi / (lam * 1e-9) * (1.0 - 0.5 * u * u);
  };
  const double expected = beta(1550.0) - beta(942.0) + beta(914.0) - beta(scheme.signal_nm);
  EXPECT_NEAR(delta_beta(s, scheme, 0.0), expected, 1e-6 * std::abs(expected));
}

// Dense 0.1 bar scan: independent location of the sign change.
double scan_root(const FiberSetup& s, const ConversionScheme& scheme, double lo, double hi) {
  double prev = delta_beta(s, scheme, lo);
  for (int i = 1; lo + 0.1 * i <= hi + 1e-9; ++i) {
    const double p = lo + 0.1 * i;
    const double cur = delta_beta(s, scheme, p);
    if (std::signbit(cur) != std::signbit(prev)) return p - 0.1 * cur / (cur - prev);
    prev = cur;
  }
  return std::nan("");
}

TEST(OptimalPressure, ReferenceConfigurationAgainstDenseScan) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  const auto r = optimal_pressure(s, scheme, 50.0, 150.0);
  EXPECT_GE(r.pressure_bar, 60.0);
  EXPECT_LE(r.pressure_bar, 100.0);
  EXPECT_NEAR(r.pressure_bar, 92.79, 0.05);
  EXPECT_NEAR(r.pressure_bar, scan_root(s, scheme, 50.0, 150.0), 0.1);
  EXPECT_LE(std::abs(r.residual_rad_per_m), kDeltaBetaTolerance);
}

TEST(OptimalPressure, MarcatiliVariant) {
  auto s = test::reference_setup(IndexModel::Marcatili);
  const auto r = optimal_pressure(s, test::reference_scheme(), 50.0, 150.0);
  EXPECT_NEAR(r.pressure_bar, 93.2, 0.1);
}

TEST(OptimalPressure, BracketIndependent) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  const double ref = optimal_pressure(s, scheme, 50.0, 150.0).pressure_bar;
  for (auto [lo, hi] : {std::pair{20.0, 200.0}, {60.0, 100.0}, {90.0, 95.0}, {40.0, 120.0}, {85.0, 180.0}})
    EXPECT_LT(std::abs(optimal_pressure(s, scheme, lo, hi).pressure_bar - ref), 0.01) << lo << "," << hi;
}

TEST(OptimalPressure, ToleranceConvergence) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  const double a = optimal_pressure(s, scheme, 50.0, 150.0, 1e-6).pressure_bar;
  const double b = optimal_pressure(s, scheme, 50.0, 150.0, 5e-7).pressure_bar;
  EXPECT_LT(std::abs(a - b), 0.01);
}

TEST(OptimalPressure, NoRootReportsEndpoints) {
  auto s = test::reference_setup();
  try {
    optimal_pressure(s, test::reference_scheme(), 40.0, 60.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRoot);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("delta-beta(40)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("delta-beta(60)"), std::string::npos) << msg;
  }
}

TEST(DeltaBeta, ContinuousAndMonotoneOverBracket) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  double prev = delta_beta(s, scheme, 50.0);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = delta_beta(s, scheme, 50.0 + 0.1 * i);
    EXPECT_GT(cur, prev);
    EXPECT_LT(std::abs(cur - prev), 0.5);  // rad/m per 0.1 bar
    prev = cur;
  }
}

TEST(PhaseMatchingFactor, Values) {
  EXPECT_EQ(phase_matching_factor(0.0, 1.85), 1.0);
  EXPECT_NEAR(phase_matching_factor(2.0 * kPi / 2.0, 2.0), 0.0, 1e-30);
  EXPECT_NEAR(phase_matching_factor(kPi / 2.0, 2.0), 0.4052847346, 1e-10);
  EXPECT_THROW(phase_matching_factor(1.0, 0.0), Error);
}

TEST(PhaseMatchingFactorProperty, UnitIntervalAndOneOnlyAtZero) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> db(-1e3, 1e3), l(1e-3, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const double f = phase_matching_factor(db(rng), l(rng));
    EXPECT_GE(f, 0.0);
    EXPECT_LT(f, 1.0);
  }
}

TEST(PressureAcceptance, WidthScalesInverselyWithLength) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  const double p = optimal_pressure(s, scheme, 50.0, 150.0).pressure_bar;
  const auto a = pressure_acceptance(s, scheme, 1.85, p);
  const auto b = pressure_acceptance(s, scheme, 3.7, p);
  EXPECT_NEAR(b.width_bar() / a.width_bar(), 0.5, 0.025);
  const double ratio = (a.upper_bar - p) / (p - a.lower_bar);
  EXPECT_GE(ratio, 0.8);
  EXPECT_LE(ratio, 1.25);
  EXPECT_NEAR(phase_matching_factor(delta_beta(s, scheme, a.lower_bar), 1.85), 0.5, 1e-9);
  EXPECT_NEAR(phase_matching_factor(delta_beta(s, scheme, a.upper_bar), 1.85), 0.5, 1e-9);
}

TEST(PressureAcceptance, VanishingLengthIsUnbounded) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  const double p = optimal_pressure(s, scheme, 50.0, 150.0).pressure_bar;
  EXPECT_EQ(code_of([&] { pressure_acceptance(s, scheme, 1e-4, p, 50.0, 0.5); }), ErrorCode::Unbounded);
}

TEST(WallThickness, RoundTrip) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  const double p = optimal_pressure(s, scheme, 50.0, 150.0).pressure_bar;
  const auto est = infer_wall_thickness(p, s, scheme, 1.22, 1.2875, 75.0, 150.0);
  EXPECT_NEAR(est.wall_thickness_um, 1.28, 1e-3);
}

TEST(WallThickness, MeasuredPressureMapsNearNominalWall) {
  auto s = test::reference_setup();
  const auto est = infer_wall_thickness(83.0, s, test::reference_scheme(), 1.22, 1.2875, 75.0, 150.0);
  EXPECT_NEAR(est.wall_thickness_um, 1.28, 0.05);
  EXPECT_NEAR(est.achieved_pressure_bar, 83.0, 1e-3);
}

TEST(WallThickness, MonotoneInMeasuredPressure) {
  auto s = test::reference_setup();
  const auto scheme = test::reference_scheme();
  double prev = 10.0;
  for (double p : {84.0, 88.0, 92.0, 96.0, 100.0}) {
    const double t = infer_wall_thickness(p, s, scheme, 1.22, 1.2875, 75.0, 150.0).wall_thickness_um;
    EXPECT_LT(t, prev);
    prev = t;
  }
}

TEST(WallThickness, UnbracketedMeasurement) {
  auto s = test::reference_setup();
  EXPECT_EQ(code_of([&] { infer_wall_thickness(140.0, s, test::reference_scheme(), 1.22, 1.2875, 75.0, 150.0); }),
            ErrorCode::NoRoot);
}

}  // namespace
}  // namespace csrs
