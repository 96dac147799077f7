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

// Minimal reader for the toolkit's comma-separated inputs: a header row,
// `#` comment lines, no quoting.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csrs::csv {

struct Row {
  int line = 0;  // 1-based line number in the source
  std::vector<std::string> fields;
};

struct Document {
  int header_line = 0;
  std::vector<std::string> header;
  std::vector<Row> rows;
};

/// Splits text into header and data rows. Blank and `#` lines are skipped.
/// Throws Parse when no header row is present.
Document parse(std::string_view text);

/// Reads a whole file; throws Io when it cannot be opened.
std::string read_file(const std::string& path);

std::string trim(std::string_view s);

/// Strict decimal parse of the whole field (no trailing junk).
std::optional<double> to_double(std::string_view s);
std::optional<long long> to_integer(std::string_view s);

/// Shortest representation that round-trips to the same double.
std::string format_double(double v);

/// Quotes a field when it contains a comma, quote or newline.
std::string escape_field(const std::string& s);

}  // namespace csrs::csv
