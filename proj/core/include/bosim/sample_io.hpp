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
#include <iosfwd>
#include <span>
#include <string>

#include "bosim/states.hpp"

// JSON-lines sample files. The first line is a header object
//
//   {"count":N,"format":"bosim.samples","input":[1,2],"m":60,"matrix_hash":"0x...",
//    "model":"boson","n":2,"seed":1,"space":"full","version":"0.1.0"}
//
// followed by one line per draw, {"i":<draw index>,"out":[1-based ascending modes]}.

namespace bosim {

std::string sample_header_line(const SampleHeader &header, uint64_t count);
std::string sample_draw_line(uint64_t index, std::span<const int> ascending_modes);

void write_samples(std::ostream &out, const SampleSet &set);
void write_samples(const std::filesystem::path &path, const SampleSet &set);

/// Throws std::invalid_argument on malformed files, draw indices out of
/// sequence, or draws inconsistent with the header.
SampleSet read_samples(std::istream &in);
SampleSet read_samples(const std::filesystem::path &path);

}  // namespace bosim
