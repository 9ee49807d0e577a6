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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bosim::cli {

/// Exit codes: 0 success, 2 validation or usage failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// progress and the single-line "error: ..." message go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "1,2,4", "1..20" and "1-3,7" style 1-based lists, returned as written.
std::vector<int> parse_mode_list(std::string_view text);

}  // namespace bosim::cli
