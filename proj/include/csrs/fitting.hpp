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

// Parameter estimation for the three measured curve shapes: cut-back
// transmission (linear in dB), efficiency versus length (one scale factor)
// and the bend-radius saturation of the optimal pressure.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "csrs/efficiency.hpp"

namespace csrs {

struct DataPoint {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> sigma;
};

struct DataSeries {
  std::vector<DataPoint> points;
  std::string x_unit;
  std::string y_unit;

  /// True when every point carries σ (σ is all-or-nothing).
  bool has_sigma() const;
  /// Finite values, positive σ, consistent σ presence, at least min_points.
  void validate(std::size_t min_points) const;
};

/// CSV with header `x,y` or `x,y,sigma`; `#` comment lines. Throws Parse with
/// the offending line number.
DataSeries parse_series(std::string_view text);
DataSeries load_series(const std::string& path);

struct FitParameter {
  std::string name;
  double value = 0.0;
  std::optional<double> std_error;
};

struct FitResult {
  std::vector<FitParameter> parameters;
  double residual_norm = 0.0;  // Euclidean norm of the unweighted residuals
  bool converged = true;
  int iterations = 0;
  int degrees_of_freedom = 0;

  double value(const std::string& name) const;
  std::optional<double> std_error(const std::string& name) const;
  bool has_standard_errors() const;
};

/// Ordinary (or σ-weighted) least squares on T_dB = −α·L + intercept.
/// Parameters: alpha_db_per_m, intercept_db.
FitResult fit_cutback(const DataSeries& series);

/// Least squares for C with the loss model held fixed; y is η as a fraction,
/// x is L in metres. Parameter: c_percent_per_w2m2.
FitResult fit_efficiency_length(const DataSeries& series, const EfficiencyModel& model,
                                const ConversionFields& fields, double sinc_factor = 1.0);

/// p(r) = p_max · (1 − exp(−b·(r − r0))).
double saturation_curve(double p_max, double b, double r0, double r);

struct SaturationGuess {
  double p_max = 0.0;
  double b = 0.0;
  double r0 = 0.0;
};

/// Reproducible starting point: p_max = max y, r0 = min x, b from the slope
/// of the two smallest-x points divided by p_max.
SaturationGuess auto_saturation_guess(const DataSeries& series);

/// Damped Gauss-Newton. Converged when the relative Gauss-Newton step drops
/// below 1e-8; gives up after 200 iterations with converged = false and the
/// best iterate. Parameters: p_max, b, r0.
FitResult fit_bend_saturation(const DataSeries& series,
                              std::optional<SaturationGuess> guess = std::nullopt);

/// Independent, reproducible engine for Monte-Carlo replicate `index` of a run
/// seeded with `seed`. Replicates do not depend on evaluation order.
std::mt19937_64 replicate_engine(std::uint64_t seed, std::uint64_t index);

}  // namespace csrs
