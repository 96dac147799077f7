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

#include "csrs/numerics.hpp"

#include <cmath>
#include <utility>

#include "csrs/error.hpp"

namespace csrs::numerics {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double ftol,
                     double xtol, int max_iter) {
  return find_root(f, lo, f(lo), hi, f(hi), ftol, xtol, max_iter);
}

RootResult find_root(const std::function<double(double)>& f, double lo, double f_lo, double hi,
                     double f_hi, double ftol, double xtol, int max_iter) {
  require(std::isfinite(f_lo) && std::isfinite(f_hi), ErrorCode::Domain,
          "root bracket endpoint is not finite");
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  require(std::signbit(f_lo) != std::signbit(f_hi), ErrorCode::NoRoot, "bracket has no sign change");

  double a = lo, fa = f_lo, b = hi, fb = f_hi;
  int side = 0;
  RootResult best{std::abs(fa) < std::abs(fb) ? a : b, std::abs(fa) < std::abs(fb) ? fa : fb, 0};
  for (int it = 1; it <= max_iter; ++it) {
    // Secant (regula falsi) step, falling back to bisection when it lands
    // too close to a bracket end or after the same side was kept twice.
    double x = (a * fb - b * fa) / (fb - fa);
    const double width = b - a;
    if (!std::isfinite(x) || x <= std::min(a, b) || x >= std::max(a, b) ||
        std::abs(x - a) < 0.01 * std::abs(width) || std::abs(b - x) < 0.01 * std::abs(width)) {
      x = 0.5 * (a + b);
    }
    const double fx = f(x);
    require(std::isfinite(fx), ErrorCode::Domain, "function is not finite inside root bracket");
    if (std::abs(fx) < std::abs(best.fx)) best = {x, fx, it};
    best.iterations = it;
    if (std::abs(fx) <= ftol) return {x, fx, it};
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = x;
      fb = fx;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
    if (std::abs(b - a) <= xtol) return best;
  }
  return best;
}

MaxResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double rel_tol, int max_iter) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(b - a) <= rel_tol * std::abs(0.5 * (a + b))) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

}  // namespace csrs::numerics
