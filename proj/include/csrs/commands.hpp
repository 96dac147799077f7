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

// Command layer shared by the C API and the command-line tool. Each command
// turns a configuration into plot-ready tables. Numbers are written in their
// shortest round-trip form so identical runs give identical bytes.

#include <optional>
#include <string>
#include <vector>

#include "csrs/config.hpp"
#include "csrs/error.hpp"

namespace csrs {

struct Table {
  std::string name;  // output file name, e.g. "phase_match.csv"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Metadata lines (each prefixed with "# "), the header row, then the rows.
  std::string to_csv(const std::vector<std::string>& metadata) const;
};

struct Report {
  std::vector<std::string> metadata;
  std::vector<Table> tables;
  std::vector<std::string> warnings;
  int exit_code = 0;  // 3 when a fit did not converge
  std::string message;

  const Table* find(const std::string& name) const;
};

/// Maps an error category to a process exit code: 2 for input and
/// infeasibility problems, 3 for numerical non-convergence, 1 otherwise.
int exit_code_for(ErrorCode code);

/// Tool version, config digest, model variants, seed and the normalized config.
std::vector<std::string> metadata_lines(const ToolkitConfig& cfg);

Report run_phase_match(const ToolkitConfig& cfg, std::optional<SweepRange> pressures = {});
Report run_efficiency(const ToolkitConfig& cfg, std::optional<SweepRange> lengths = {});
Report run_bend(const ToolkitConfig& cfg, std::optional<SweepRange> radii = {});
Report run_screen(const ToolkitConfig& cfg);

enum class FitKind { Cutback, Efficiency, Bend };

FitKind fit_kind_from_string(const std::string& name);
const char* to_string(FitKind kind);

Report run_fit(const ToolkitConfig& cfg, FitKind kind, const std::string& data_csv_path);

/// Writes every table into dir (created if missing).
void write_report(const Report& report, const std::string& dir);

}  // namespace csrs
