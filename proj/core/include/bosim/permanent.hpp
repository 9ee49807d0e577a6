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

#include <vector>

#include "bosim/matrix.hpp"

namespace bosim {

/// Largest order accepted by the O(n 2^n) kernels.
inline constexpr size_t kMaxPermanentOrder = 30;
/// Largest order accepted by the n! reference kernel.
inline constexpr size_t kMaxNaiveOrder = 9;

/// Sum over all permutations. Reference oracle only; n <= 9.
cplx perm_naive(const CMatrix &a);

/// Ryser inclusion-exclusion over column subsets in Gray-code order.
///
/// The subset index space [1, 2^n) is cut into a fixed number of contiguous
/// chunks, each of which rebuilds its row sums from its first Gray code and
/// accumulates with Neumaier compensation. Chunks are summed in index order,
/// so the result is bit-identical for any `workers` value (0 = hardware
/// concurrency).
cplx perm_ryser(const CMatrix &a, unsigned workers = 1);

/// Glynn's formula over sign vectors with the first sign fixed, Gray-code
/// ordered; same chunking contract as perm_ryser.
cplx perm_glynn(const CMatrix &a, unsigned workers = 1);

/// Permanents of every column-deleted minor of an r x (r+1) matrix `b`:
/// result[l] = Perm(b without column l). Computed together in O(r 2^r) by
/// differentiating Glynn's formula for [b; x] with respect to the free row x.
/// For r = 0 returns {1}.
std::vector<cplx> column_minor_permanents(const CMatrix &b);

}  // namespace bosim
