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

#include <functional>

namespace csrs::numerics {

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Bracketed root of a continuous function: bisection with secant
/// acceleration (Illinois-style). Requires f(lo) and f(hi) of opposite
/// sign, or one of them exactly zero. Stops when |f| <= ftol or the bracket
/// is narrower than xtol.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double ftol, double xtol, int max_iter = 200);

/// Same as find_root but with endpoint values already evaluated.
RootResult find_root(const std::function<double(double)>& f, double lo, double f_lo,
                     double hi, double f_hi, double ftol, double xtol, int max_iter = 200);

struct MaxResult {
  double x = 0.0;
  double fx = 0.0;
};

/// Golden-section maximisation of a unimodal function on [lo, hi].
/// Terminates when the bracket is narrower than rel_tol * |x|.
MaxResult golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double rel_tol = 1e-12, int max_iter = 400);

}  // namespace csrs::numerics
