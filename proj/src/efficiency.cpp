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

#include "csrs/efficiency.hpp"

#include <cmath>

#include "csrs/error.hpp"
#include "csrs/numerics.hpp"

namespace csrs {

namespace {

constexpr double kDbPerNeper = 10.0 / 2.302585092994045684;  // 10/ln 10

// (1 − e^{−x}) / x, continuous through x = 0.
double attenuated_length_ratio(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x / 2.0 + x * x / 6.0;
  return -std::expm1(-x) / x;
}

}  // namespace

void LightField::validate() const {
  require(power_w >= 0.0, ErrorCode::InvalidArgument, "field power must be non-negative");
  require(alpha_db_per_m >= 0.0, ErrorCode::InvalidArgument, "attenuation must be non-negative");
  require(incoupling >= 0.0 && incoupling <= 1.0, ErrorCode::InvalidArgument,
          "incoupling efficiency must lie in [0, 1]");
}

const char* to_string(LossVariant v) {
  switch (v) {
    case LossVariant::Lossless: return "lossless";
    case LossVariant::LumpedExponential: return "lumped-exponential";
    case LossVariant::AmplitudeIntegral: return "amplitude-integral";
  }
  return "?";
}

LossVariant loss_variant_from_string(const std::string& name) {
  if (name == "lossless") return LossVariant::Lossless;
  if (name == "lumped-exponential") return LossVariant::LumpedExponential;
  if (name == "amplitude-integral") return LossVariant::AmplitudeIntegral;
  fail(ErrorCode::InvalidArgument,
       "unknown loss variant '" + name + "' (lossless|lumped-exponential|amplitude-integral)");
}

void EfficiencyModel::validate() const {
  require(c_percent_per_w2m2 > 0.0, ErrorCode::InvalidArgument, "coefficient C must be positive");
  require(alpha_signal_db_per_m >= 0.0, ErrorCode::InvalidArgument,
          "signal attenuation must be non-negative");
}

double alpha_linear(double alpha_db_per_m) {
  require(alpha_db_per_m >= 0.0, ErrorCode::InvalidArgument, "attenuation must be non-negative");
  return alpha_db_per_m / kDbPerNeper;
}

double alpha_db(double alpha_per_m) { return alpha_per_m * kDbPerNeper; }

double total_alpha_linear(const EfficiencyModel& model, const ConversionFields& fields) {
  return alpha_linear(fields.pump1.alpha_db_per_m) + alpha_linear(fields.pump2.alpha_db_per_m) +
         alpha_linear(fields.probe.alpha_db_per_m) + alpha_linear(model.alpha_signal_db_per_m);
}

double predicted_efficiency(const EfficiencyModel& model, const ConversionFields& fields,
                            double length_m, double sinc_factor) {
  require(length_m > 0.0, ErrorCode::InvalidArgument, "length must be positive");
  require(sinc_factor >= 0.0 && sinc_factor <= 1.0, ErrorCode::InvalidArgument,
          "sinc factor must lie in [0, 1]");
  fields.pump1.validate();
  fields.pump2.validate();
  fields.probe.validate();

  const double c = model.c_percent_per_w2m2 / 100.0;
  const double powers = fields.pump1.coupled_power_w() * fields.pump2.coupled_power_w();
  const double base = c * powers * sinc_factor;
  const double l = length_m;

  switch (model.variant) {
    case LossVariant::Lossless:
      return base * l * l;
    case LossVariant::LumpedExponential:
      return base * l * l * std::exp(-total_alpha_linear(model, fields) * l);
    case LossVariant::AmplitudeIntegral: {
      const double a_signal = alpha_linear(model.alpha_signal_db_per_m);
      const double a = (alpha_linear(fields.pump1.alpha_db_per_m) +
                        alpha_linear(fields.pump2.alpha_db_per_m) +
                        alpha_linear(fields.probe.alpha_db_per_m) - a_signal) /
                       2.0;
      const double eff_len = l * attenuated_length_ratio(a * l);
      return base * std::exp(-a_signal * l) * eff_len * eff_len;
    }
  }
  fail(ErrorCode::Internal, "unhandled loss variant");
}

double max_power_efficiency(const EfficiencyModel& model, const ConversionFields& fields,
                            double pump1_power_w, double pump2_power_w, double length_m) {
  ConversionFields f = fields;
  f.pump1.power_w = pump1_power_w;
  f.pump2.power_w = pump2_power_w;
  return predicted_efficiency(model, f, length_m, 1.0);
}

double lumped_optimal_length(double total_alpha_per_m) {
  require(total_alpha_per_m > 0.0, ErrorCode::Unbounded,
          "no attenuation: efficiency grows without bound in L");
  return 2.0 / total_alpha_per_m;
}

OptimalLength optimal_length(const EfficiencyModel& model, const ConversionFields& fields,
                             double l_min_m, double l_max_m) {
  require(l_min_m > 0.0 && l_max_m > l_min_m, ErrorCode::InvalidArgument, "invalid length range");
  const double a_signal = alpha_linear(model.alpha_signal_db_per_m);
  const double a_total = total_alpha_linear(model, fields);
  bool unbounded = model.variant == LossVariant::Lossless || a_total == 0.0;
  // Without signal loss the amplitude-integral efficiency saturates but never peaks.
  if (model.variant == LossVariant::AmplitudeIntegral && a_signal == 0.0) unbounded = true;
  require(!unbounded, ErrorCode::Unbounded,
          std::string("efficiency has no finite optimum length for the ") + to_string(model.variant) +
              " variant with these attenuations");

  // Search in log L: the optimum can sit anywhere between millimetres and a kilometre.
  auto objective = [&](double log_l) {
    return predicted_efficiency(model, fields, std::exp(log_l), 1.0);
  };
  const auto best = numerics::golden_section_max(objective, std::log(l_min_m), std::log(l_max_m),
                                                 1e-13);
  const double l_opt = std::exp(best.x);
  require(l_opt < l_max_m * (1.0 - 1e-6) && l_opt > l_min_m * (1.0 + 1e-6), ErrorCode::Unbounded,
          "efficiency maximum lies on the boundary of the length search range");
  return {l_opt, predicted_efficiency(model, fields, l_opt, 1.0)};
}

LossConsistency loss_consistency(double c_percent_per_w2m2, double eta_percent_per_w2,
                                 double length_m, double alpha_pump1_db, double alpha_pump2_db,
                                 double alpha_probe_db) {
  require(c_percent_per_w2m2 > 0.0 && eta_percent_per_w2 > 0.0 && length_m > 0.0,
          ErrorCode::InvalidArgument, "loss consistency needs positive C, eta and L");
  LossConsistency out;
  out.transmission_ratio = eta_percent_per_w2 / (c_percent_per_w2m2 * length_m * length_m);
  require(out.transmission_ratio > 0.0 && out.transmission_ratio <= 1.0, ErrorCode::Domain,
          "fitted efficiency exceeds the lossless prediction; no non-negative attenuation fits");
  out.total_alpha_db_per_m = alpha_db(-std::log(out.transmission_ratio) / length_m);
  out.measured_alpha_db_per_m = alpha_pump1_db + alpha_pump2_db + alpha_probe_db;
  out.alpha_signal_db_per_m = out.total_alpha_db_per_m - out.measured_alpha_db_per_m;
  return out;
}

}  // namespace csrs
