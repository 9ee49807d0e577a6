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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bosim {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Used both for interferometer transfer matrices (square, row = output mode,
/// column = input mode) and for the small rectangular blocks the permanent
/// kernels and samplers work on.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(size_t rows, size_t cols, std::vector<cplx> data);

    static CMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    cplx &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    std::span<cplx> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const cplx> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const cplx> data() const { return data_; }
    std::span<cplx> data() { return data_; }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix &rhs) const;

    /// Elementwise |a_ij|^2, still stored as complex so the permanent kernels apply.
    CMatrix abs_squared() const;

    /// True when every element is finite.
    bool all_finite() const;

    bool operator==(const CMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// A square matrix describing an m-mode linear interferometer.
///
/// Elements are indexed [output][input]. The `unitary` flag records whether the
/// producer guarantees unitarity (generated or composed) or not (reconstructed
/// from measurements); consumers that need unitarity check it.
struct TransferMatrix {
    CMatrix elements;
    bool unitary = false;

    size_t modes() const { return elements.rows(); }
    const cplx &operator()(size_t out, size_t in) const { return elements(out, in); }

    /// Validates squareness, m >= 1 and finiteness; throws std::invalid_argument.
    void validate() const;
};

/// Default acceptance tolerance for the `unitary` flag on ingested matrices.
inline constexpr double kUnitarityTolerance = 1e-10;

struct UnitarityReport {
    /// Mean of |(M^dagger M)_ij| over off-diagonal entries. This is the headline statistic.
    double mean_offdiagonal = 0.0;
    double max_offdiagonal = 0.0;
    /// max_i |(M^dagger M)_ii - 1|
    double max_diagonal_deviation = 0.0;
    /// Spectral norm of M^dagger M - I (power iteration on the Hermitian residual).
    double spectral_deviation = 0.0;
};

UnitarityReport unitarity_report(const CMatrix &m);

/// Mean off-diagonal |(M^dagger M)_ij|; zero for 1x1 inputs.
double unitarity_deviation(const CMatrix &m);

/// Haar-random m x m unitary, deterministic in (m, seed).
///
/// i.i.d. standard complex Gaussians, column-wise modified Gram-Schmidt with one
/// reorthogonalization pass. Gram-Schmidt yields a triangular factor with
/// positive real diagonal, which fixes the phase convention.
TransferMatrix haar_unitary(size_t m, uint64_t seed);

/// 64-bit fingerprint (FNV-1a over the dimension and the IEEE bit patterns).
uint64_t fingerprint(const CMatrix &m);

}  // namespace bosim
