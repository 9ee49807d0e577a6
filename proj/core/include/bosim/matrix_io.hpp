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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "bosim/matrix.hpp"

namespace bosim {

inline constexpr std::string_view kVersion = BOSIM_VERSION;

/// "0x" followed by 16 lowercase hex digits.
std::string hash_hex(uint64_t hash);
uint64_t parse_hash_hex(std::string_view text);

/// Matrix JSON: {"m": <int>, "re": [[...]], "im": [[...]]} plus provenance
/// keys "fingerprint" and "version". Doubles are written with round-trip
/// precision.
std::string matrix_to_json(const TransferMatrix &u);

/// Parses and validates the matrix JSON. The `unitary` flag of the result is
/// set by measuring the matrix against kUnitarityTolerance, never by trusting
/// the file. Throws std::invalid_argument on malformed input.
TransferMatrix matrix_from_json(std::string_view text);

void write_matrix(const std::filesystem::path &path, const TransferMatrix &u);
TransferMatrix read_matrix(const std::filesystem::path &path);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace bosim
