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

#include "csrs/fitting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "csrs/csv.hpp"
#include "csrs/error.hpp"

namespace csrs {

bool DataSeries::has_sigma() const {
  return !points.empty() &&
         std::all_of(points.begin(), points.end(), [](const DataPoint& p) { return p.sigma.has_value(); });
}

void DataSeries::validate(std::size_t min_points) const {
  require(points.size() >= min_points, ErrorCode::InvalidArgument,
          "fit needs at least " + std::to_string(min_points) + " points, got " +
              std::to_string(points.size()));
  const bool any_sigma =
      std::any_of(points.begin(), points.end(), [](const DataPoint& p) { return p.sigma.has_value(); });
  require(!any_sigma || has_sigma(), ErrorCode::InvalidArgument,
          "sigma must be given for every point or for none");
  for (const auto& p : points) {
    require(std::isfinite(p.x) && std::isfinite(p.y), ErrorCode::InvalidArgument,
            "data points must be finite");
    require(!p.sigma || (std::isfinite(*p.sigma) && *p.sigma > 0.0), ErrorCode::InvalidArgument,
            "sigma must be finite and positive");
  }
}

DataSeries parse_series(std::string_view text) {
  const auto doc = csv::parse(text);
  const auto& h = doc.header;
  const bool ok_header = (h.size() == 2 || h.size() == 3) && h[0] == "x" && h[1] == "y" &&
                         (h.size() == 2 || h[2] == "sigma");
  require(ok_header, ErrorCode::Parse,
          "line " + std::to_string(doc.header_line) + ": header must be 'x,y' or 'x,y,sigma'");
  DataSeries s;
  for (const auto& row : doc.rows) {
    const std::string where = "line " + std::to_string(row.line) + ": ";
    require(row.fields.size() == h.size(), ErrorCode::Parse,
            where + "expected " + std::to_string(h.size()) + " fields, found " +
                std::to_string(row.fields.size()));
    DataPoint p;
    const auto x = csv::to_double(row.fields[0]);
    const auto y = csv::to_double(row.fields[1]);
    require(x.has_value(), ErrorCode::Parse, where + "non-numeric x '" + row.fields[0] + "'");
    require(y.has_value(), ErrorCode::Parse, where + "non-numeric y '" + row.fields[1] + "'");
    p.x = *x;
    p.y = *y;
    if (h.size() == 3) {
      const auto sg = csv::to_double(row.fields[2]);
      require(sg.has_value() && *sg > 0.0, ErrorCode::Parse,
              where + "sigma must be a positive number, got '" + row.fields[2] + "'");
      p.sigma = *sg;
    }
    s.points.push_back(p);
  }
  return s;
}

DataSeries load_series(const std::string& path) { return parse_series(csv::read_file(path)); }

double FitResult::value(const std::string& name) const {
  for (const auto& p : parameters)
    if (p.name == name) return p.value;
  fail(ErrorCode::InvalidArgument, "no fit parameter named '" + name + "'");
}

std::optional<double> FitResult::std_error(const std::string& name) const {
  for (const auto& p : parameters)
    if (p.name == name) return p.std_error;
  fail(ErrorCode::InvalidArgument, "no fit parameter named '" + name + "'");
}

bool FitResult::has_standard_errors() const {
  return !parameters.empty() && parameters.front().std_error.has_value();
}

namespace {

std::vector<double> weights_of(const DataSeries& s) {
  std::vector<double> w(s.points.size(), 1.0);
  if (s.has_sigma())
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = 1.0 / (*s.points[i].sigma * *s.points[i].sigma);
  return w;
}

// Covariance from the weighted normal matrix. With σ given the errors are
// taken as absolute; otherwise they are scaled by the residual variance.
Eigen::MatrixXd covariance(const Eigen::MatrixXd& normal, double weighted_rss, int dof, bool absolute) {
  Eigen::MatrixXd cov = normal.inverse();
  if (!absolute) cov *= weighted_rss / dof;
  return cov;
}

void attach_errors(FitResult& fit, const Eigen::MatrixXd& normal, double weighted_rss, bool absolute) {
  if (fit.degrees_of_freedom < 1) return;
  const Eigen::MatrixXd cov = covariance(normal, weighted_rss, fit.degrees_of_freedom, absolute);
  for (std::size_t i = 0; i < fit.parameters.size(); ++i)
    fit.parameters[i].std_error = std::sqrt(std::max(0.0, cov(static_cast<Eigen::Index>(i),
                                                              static_cast<Eigen::Index>(i))));
}

}  // namespace

FitResult fit_cutback(const DataSeries& series) {
  series.validate(3);
  const auto w = weights_of(series);
  const auto n = static_cast<Eigen::Index>(series.points.size());

  double xmin = series.points.front().x, xmax = xmin;
  for (const auto& p : series.points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
  }
  require(xmax > xmin, ErrorCode::InvalidArgument, "cut-back fit needs at least two distinct lengths");

  // Centre x for conditioning; the model is y = slope·x + intercept.
  double sw = 0.0, swx = 0.0, swy = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = series.points[static_cast<std::size_t>(i)];
    sw += w[i];
    swx += w[i] * p.x;
    swy += w[i] * p.y;
  }
  const double xbar = swx / sw, ybar = swy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = series.points[static_cast<std::size_t>(i)];
    sxx += w[i] * (p.x - xbar) * (p.x - xbar);
    sxy += w[i] * (p.x - xbar) * (p.y - ybar);
  }
  const double slope = sxy / sxx;
  const double intercept = ybar - slope * xbar;

  double rss = 0.0, wrss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = series.points[static_cast<std::size_t>(i)];
    const double r = p.y - (slope * p.x + intercept);
    rss += r * r;
    wrss += w[i] * r * r;
  }

  FitResult fit;
  fit.parameters = {{"alpha_db_per_m", -slope, {}}, {"intercept_db", intercept, {}}};
  fit.residual_norm = std::sqrt(rss);
  fit.degrees_of_freedom = static_cast<int>(n) - 2;
  fit.iterations = 1;
  if (fit.degrees_of_freedom >= 1) {
    const double scale = series.has_sigma() ? 1.0 : wrss / fit.degrees_of_freedom;
    const double var_slope = scale / sxx;
    const double var_intercept = scale * (1.0 / sw + xbar * xbar / sxx);
    fit.parameters[0].std_error = std::sqrt(var_slope);
    fit.parameters[1].std_error = std::sqrt(var_intercept);
  }
  return fit;
}

FitResult fit_efficiency_length(const DataSeries& series, const EfficiencyModel& model,
                                const ConversionFields& fields, double sinc_factor) {
  series.validate(1);
  require(std::any_of(series.points.begin(), series.points.end(),
                      [](const DataPoint& p) { return p.y != 0.0; }),
          ErrorCode::InvalidArgument, "efficiency fit needs at least one non-zero efficiency");
  EfficiencyModel unit = model;
  unit.c_percent_per_w2m2 = 1.0;
  const auto w = weights_of(series);

  std::vector<double> g(series.points.size());
  double sgg = 0.0, sgy = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& p = series.points[i];
    g[i] = predicted_efficiency(unit, fields, p.x, sinc_factor);
    sgg += w[i] * g[i] * g[i];
    sgy += w[i] * g[i] * p.y;
  }
  require(sgg > 0.0, ErrorCode::InvalidArgument,
          "model efficiency is zero at every length (zero pump power?)");
  const double c = sgy / sgg;

  double rss = 0.0, wrss = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = series.points[i].y - c * g[i];
    rss += r * r;
    wrss += w[i] * r * r;
  }
  FitResult fit;
  fit.parameters = {{"c_percent_per_w2m2", c, {}}};
  fit.residual_norm = std::sqrt(rss);
  fit.degrees_of_freedom = static_cast<int>(series.points.size()) - 1;
  fit.iterations = 1;
  Eigen::MatrixXd normal(1, 1);
  normal(0, 0) = sgg;
  attach_errors(fit, normal, wrss, series.has_sigma());
  return fit;
}

double saturation_curve(double p_max, double b, double r0, double r) {
  return p_max * -std::expm1(-b * (r - r0));
}

SaturationGuess auto_saturation_guess(const DataSeries& series) {
  series.validate(2);
  auto pts = series.points;
  std::sort(pts.begin(), pts.end(), [](const DataPoint& a, const DataPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  SaturationGuess g;
  g.r0 = pts.front().x;
  g.p_max = std::max_element(pts.begin(), pts.end(), [](const DataPoint& a, const DataPoint& b) {
              return a.y < b.y;
            })->y;
  const double span = pts.back().x - pts.front().x;
  double slope = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].x > pts[0].x) {
      slope = (pts[i].y - pts[0].y) / (pts[i].x - pts[0].x);
      break;
    }
  }
  g.b = g.p_max != 0.0 ? slope / g.p_max : 0.0;
  if (!(g.b > 0.0) || !std::isfinite(g.b)) g.b = span > 0.0 ? 3.0 / span : 1.0;
  return g;
}

FitResult fit_bend_saturation(const DataSeries& series, std::optional<SaturationGuess> guess) {
  series.validate(4);
  // Sorting makes the result independent of input order.
  DataSeries sorted = series;
  std::sort(sorted.points.begin(), sorted.points.end(), [](const DataPoint& a, const DataPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  const auto& pts = sorted.points;
  const auto w = weights_of(sorted);
  const auto n = static_cast<Eigen::Index>(pts.size());
  const SaturationGuess g0 = guess ? *guess : auto_saturation_guess(sorted);

  Eigen::Vector3d theta(g0.p_max, g0.b, g0.r0);
  Eigen::VectorXd wv(n);
  for (Eigen::Index i = 0; i < n; ++i) wv[i] = w[static_cast<std::size_t>(i)];

  auto residuals = [&](const Eigen::Vector3d& t) {
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i)
      r[i] = pts[static_cast<std::size_t>(i)].y -
             saturation_curve(t[0], t[1], t[2], pts[static_cast<std::size_t>(i)].x);
    return r;
  };
  auto jacobian = [&](const Eigen::Vector3d& t) {
    Eigen::MatrixXd j(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double dr = pts[static_cast<std::size_t>(i)].x - t[2];
      const double e = std::exp(-t[1] * dr);
      j(i, 0) = -std::expm1(-t[1] * dr);
      j(i, 1) = t[0] * dr * e;
      j(i, 2) = -t[0] * t[1] * e;
    }
    return j;
  };
  auto cost = [&](const Eigen::VectorXd& r) { return (wv.array() * r.array().square()).sum(); };

  constexpr int kMaxIterations = 200;
  constexpr double kStepTolerance = 1e-8;
  double lambda = 1e-3;
  Eigen::VectorXd r = residuals(theta);
  double c = cost(r);
  bool converged = false;
  int it = 0;
  for (it = 1; it <= kMaxIterations; ++it) {
    const Eigen::MatrixXd j = jacobian(theta);
    const Eigen::MatrixXd jtw = j.transpose() * wv.asDiagonal();
    const Eigen::Matrix3d normal = jtw * j;
    const Eigen::Vector3d gradient = jtw * r;

    const Eigen::Vector3d gn_step = normal.ldlt().solve(gradient);
    const double rel_gn = (gn_step.array().abs() / theta.array().abs().max(1e-12)).maxCoeff();
    if (gn_step.allFinite() && rel_gn < kStepTolerance) {
      theta += gn_step;
      r = residuals(theta);
      c = cost(r);
      converged = true;
      break;
    }

    bool accepted = false;
    while (lambda < 1e16) {
      Eigen::Matrix3d damped = normal;
      damped.diagonal() *= (1.0 + lambda);
      const Eigen::Vector3d step = damped.ldlt().solve(gradient);
      const Eigen::Vector3d trial = theta + step;
      const Eigen::VectorXd r_trial = residuals(trial);
      const double c_trial = cost(r_trial);
      if (step.allFinite() && std::isfinite(c_trial) && c_trial <= c) {
        theta = trial;
        r = r_trial;
        c = c_trial;
        lambda = std::max(lambda / 10.0, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted) break;  // no descent direction left; best iterate stands
  }

  FitResult fit;
  fit.parameters = {{"p_max", theta[0], {}}, {"b", theta[1], {}}, {"r0", theta[2], {}}};
  fit.residual_norm = r.norm();
  fit.converged = converged;
  fit.iterations = std::min(it, kMaxIterations);
  fit.degrees_of_freedom = static_cast<int>(n) - 3;
  const Eigen::MatrixXd j = jacobian(theta);
  const Eigen::MatrixXd normal = j.transpose() * wv.asDiagonal() * j;
  attach_errors(fit, normal, c, sorted.has_sigma());
  return fit;
}

std::mt19937_64 replicate_engine(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over (seed, index) gives well separated streams.
  auto mix = [](std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  const std::uint64_t a = mix(seed);
  const std::uint64_t b = mix(a ^ mix(index + 0x632BE59BD9B4E019ull));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace csrs
