// Copyright 2026 The bosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bosim/pmf.hpp"

namespace bosim {

using NumericTable = std::vector<std::vector<double>>;

/// Comma-separated numeric rows. Blank lines and lines starting with '#' are
/// skipped. A first line that does not parse as numbers is treated as a
/// header and skipped.
NumericTable parse_csv_table(std::string_view text);
NumericTable read_csv_table(const std::filesystem::path &path);
/// Single column, or a single row, flattened.
std::vector<double> read_csv_vector(const std::filesystem::path &path);

std::string format_csv_table(const NumericTable &table);

/// Round-trip formatting for doubles.
std::string format_double(double x);

/// `outcome_modes,probability` with outcomes as space-separated 1-based modes,
/// in ascending colex rank.
std::string pmf_to_csv(const Pmf &pmf);

}  // namespace bosim
