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

#include <span>

#include "bosim/matrix.hpp"
#include "bosim/states.hpp"

namespace bosim {

/// n x n block M[k][j] = U[d_k][c_j] with c the input ports and d the output
/// mode list (repeated by occupation). Row repetition encodes collisions.
///
/// Throws std::invalid_argument on out-of-range modes or when the output
/// photon count differs from the input photon count.
CMatrix scattering_submatrix(const TransferMatrix &u, const InputConfig &input, const OutputState &output);

/// Same, from raw 0-based port and ascending output lists.
CMatrix scattering_submatrix(const CMatrix &u, std::span<const int> input_ports, std::span<const int> output_modes);

}  // namespace bosim
