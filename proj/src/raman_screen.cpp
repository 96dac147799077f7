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

#include "csrs/raman_screen.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "csrs/csv.hpp"
#include "csrs/error.hpp"

namespace csrs {

namespace {

constexpr std::array<const char*, 6> kCatalogColumns = {"nu0_cm1",     "e_lower_cm1", "rel_strength",
                                                        "band",        "branch",      "j_lower"};

}  // namespace

const char* to_string(Branch b) {
  switch (b) {
    case Branch::O: return "O";
    case Branch::Q: return "Q";
    case Branch::S: return "S";
  }
  return "?";
}

const char* to_string(ShiftDirection d) {
  return d == ShiftDirection::Stokes ? "stokes" : "anti-stokes";
}

std::string RamanLine::label() const {
  return band + " " + to_string(branch) + "(" + std::to_string(j_lower) + ")";
}

Catalog parse_catalog(std::string_view text) {
  const auto doc = csv::parse(text);
  for (std::size_t i = 0; i < kCatalogColumns.size(); ++i) {
    require(i < doc.header.size(), ErrorCode::Parse,
            "line " + std::to_string(doc.header_line) + ": missing column '" + kCatalogColumns[i] + "'");
    require(doc.header[i] == kCatalogColumns[i], ErrorCode::Parse,
            "line " + std::to_string(doc.header_line) + ": expected column '" + kCatalogColumns[i] +
                "' at position " + std::to_string(i + 1) + ", found '" + doc.header[i] + "'");
  }
  require(doc.header.size() == kCatalogColumns.size(), ErrorCode::Parse,
          "line " + std::to_string(doc.header_line) + ": unexpected extra column '" +
              (doc.header.size() > kCatalogColumns.size() ? doc.header[kCatalogColumns.size()] : "") + "'");

  Catalog cat;
  for (const auto& row : doc.rows) {
    auto reject = [&](const std::string& why) { cat.diagnostics.push_back({row.line, why}); };
    if (row.fields.size() != kCatalogColumns.size()) {
      reject("expected " + std::to_string(kCatalogColumns.size()) + " fields, found " +
             std::to_string(row.fields.size()));
      continue;
    }
    RamanLine line;
    const auto nu0 = csv::to_double(row.fields[0]);
    const auto e_lower = csv::to_double(row.fields[1]);
    const auto strength = csv::to_double(row.fields[2]);
    const auto j_lower = csv::to_integer(row.fields[5]);
    if (!nu0) { reject("non-numeric nu0_cm1 '" + row.fields[0] + "'"); continue; }
    if (!e_lower) { reject("non-numeric e_lower_cm1 '" + row.fields[1] + "'"); continue; }
    if (!strength) { reject("non-numeric rel_strength '" + row.fields[2] + "'"); continue; }
    if (!j_lower) { reject("non-integer j_lower '" + row.fields[5] + "'"); continue; }
    if (*nu0 <= 0.0) { reject("nu0_cm1 must be positive"); continue; }
    if (*strength <= 0.0) { reject("rel_strength must be positive"); continue; }
    if (*j_lower < 0) { reject("j_lower must be non-negative"); continue; }
    if (row.fields[3].empty()) { reject("empty band"); continue; }
    const auto& br = row.fields[4];
    if (br == "O") line.branch = Branch::O;
    else if (br == "Q") line.branch = Branch::Q;
    else if (br == "S") line.branch = Branch::S;
    else { reject("branch '" + br + "' is not one of O, Q, S"); continue; }
    line.nu0_cm1 = *nu0;
    line.e_lower_cm1 = *e_lower;
    line.rel_strength = *strength;
    line.band = row.fields[3];
    line.j_lower = static_cast<int>(*j_lower);
    cat.lines.push_back(std::move(line));
  }
  return cat;
}

Catalog load_catalog(const std::string& path) { return parse_catalog(csv::read_file(path)); }

ShiftedWavelengths shifted_wavelengths(double pump_nm, double nu0_cm1) {
  require(pump_nm > 0.0, ErrorCode::InvalidArgument, "pump wavelength must be positive");
  const double k = 1e7 / pump_nm;
  ShiftedWavelengths out;
  const double stokes_k = k - nu0_cm1;
  if (stokes_k > 0.0) out.stokes_nm = 1e7 / stokes_k;
  out.anti_stokes_nm = 1e7 / (k + nu0_cm1);
  return out;
}

std::vector<ScreenFlag> screen(const std::vector<LightField>& pumps,
                               const std::optional<LightField>& probe,
                               const std::vector<RamanLine>& catalog, const BandpassFilter& bandpass,
                               const ScreenOptions& options) {
  require(bandpass.width_nm >= 0.0, ErrorCode::InvalidArgument, "bandpass width must be non-negative");

  struct Source {
    std::string name;
    double nm;
    bool is_probe;
  };
  std::vector<Source> sources;
  for (std::size_t i = 0; i < pumps.size(); ++i)
    sources.push_back({"pump" + std::to_string(i + 1), pumps[i].wavelength_nm, false});
  if (probe) sources.push_back({"probe", probe->wavelength_nm, true});

  std::vector<ScreenFlag> flags;
  for (const auto& src : sources) {
    for (const auto& line : catalog) {
      if (line.rel_strength < options.strength_threshold) continue;
      const auto shifted = shifted_wavelengths(src.nm, line.nu0_cm1);
      const bool conversion_channel =
          src.is_probe && options.driven_shift_cm1 &&
          std::abs(line.nu0_cm1 - *options.driven_shift_cm1) <= options.driven_tolerance_cm1;
      auto consider = [&](ShiftDirection dir, double landing, double initial_energy) {
        if (!bandpass.contains(landing)) return;
        ScreenFlag f;
        f.field = src.name;
        f.field_nm = src.nm;
        f.line = line;
        f.direction = dir;
        f.landing_nm = landing;
        f.offset_from_center_nm = landing - bandpass.center_nm;
        f.initial_state_energy_cm1 = initial_energy;
        flags.push_back(std::move(f));
      };
      if (shifted.stokes_nm && !conversion_channel)
        consider(ShiftDirection::Stokes, *shifted.stokes_nm, line.e_lower_cm1);
      consider(ShiftDirection::AntiStokes, shifted.anti_stokes_nm, line.e_lower_cm1 + line.nu0_cm1);
    }
  }
  std::stable_sort(flags.begin(), flags.end(), [](const ScreenFlag& a, const ScreenFlag& b) {
    if (a.line.rel_strength != b.line.rel_strength) return a.line.rel_strength > b.line.rel_strength;
    return a.line.nu0_cm1 < b.line.nu0_cm1;
  });
  return flags;
}

}  // namespace csrs
