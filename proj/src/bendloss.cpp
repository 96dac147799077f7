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

#include "csrs/bendloss.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "csrs/error.hpp"

namespace csrs {

double capillary_center_distance(const FiberGeometry& geom, BendAlignment alignment,
                                 double azimuth_rad) {
  require(geom.core_radius_um > 0.0 && geom.capillary_inner_radius_um >= 0.0,
          ErrorCode::InvalidArgument, "invalid fiber geometry for capillary distance");
  const double centre = geom.core_radius_um + geom.capillary_inner_radius_um;
  if (alignment == BendAlignment::WorstCase) return centre;
  require(geom.num_capillaries >= 1, ErrorCode::InvalidArgument, "need at least one capillary");
  double best = 0.0;
  for (int k = 0; k < geom.num_capillaries; ++k) {
    const double angle = azimuth_rad - 2.0 * kPi * k / geom.num_capillaries;
    best = std::max(best, centre * std::cos(angle));
  }
  return best;
}

double critical_bend_radius(const FiberGeometry& geom, double lambda_nm, const ModeLabel& core_mode,
                            const ModeLabel& clad_mode, BendAlignment alignment, double azimuth_rad) {
  const double n_core = marcatili_mode_index(lambda_nm, geom.core_radius_um, core_mode);
  const double n_clad = marcatili_mode_index(lambda_nm, geom.capillary_inner_radius_um, clad_mode);
  if (!(n_core > n_clad)) {
    std::ostringstream os;
    os.precision(10);
    os << "core mode " << core_mode.name() << " (n=" << n_core << ") does not exceed capillary mode "
       << clad_mode.name() << " (n=" << n_clad << "); no resonant bend radius exists";
    fail(ErrorCode::NoResonance, os.str());
  }
  const double d_m = capillary_center_distance(geom, alignment, azimuth_rad) * 1e-6;
  return d_m / (std::sqrt(n_core / n_clad) - 1.0);
}

std::vector<ModeAccessibility> mode_accessibility(const FiberGeometry& geom, double lambda_nm,
                                                  const BendConfiguration& bend,
                                                  const std::vector<ModeLabel>& modes,
                                                  const std::vector<ModePairing>& pairings,
                                                  std::optional<EmpiricalCutoff> lp01_cutoff) {
  require(bend.bend_radius_m > 0.0, ErrorCode::InvalidArgument, "bend radius must be positive");
  std::vector<ModeAccessibility> out;
  out.reserve(modes.size());
  for (const auto& mode : modes) {
    ModeAccessibility acc;
    acc.mode = mode;
    for (const auto& pairing : pairings) {
      if (!(pairing.core == mode)) continue;
      PairingResult pr;
      pr.pairing = pairing;
      try {
        pr.critical_radius_m = critical_bend_radius(geom, lambda_nm, pairing.core, pairing.cladding,
                                                    bend.alignment, bend.azimuth_rad);
        pr.bend_below_critical = bend.bend_radius_m < *pr.critical_radius_m;
        if (!acc.largest_critical_radius_m || *pr.critical_radius_m > *acc.largest_critical_radius_m)
          acc.largest_critical_radius_m = pr.critical_radius_m;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoResonance) throw;
      }
      acc.pairings.push_back(pr);
    }
    acc.suppressed = acc.largest_critical_radius_m && bend.bend_radius_m < *acc.largest_critical_radius_m;
    if (lp01_cutoff && mode == ModeLabel{0, 1})
      acc.below_empirical_cutoff = bend.bend_radius_m < lp01_cutoff->radius_m;
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace csrs
