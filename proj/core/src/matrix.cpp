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

#include "bosim/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "bosim/scattering.hpp"

namespace bosim {

CMatrix::CMatrix(size_t rows, size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("CMatrix: data size does not match shape");
    }
}

CMatrix CMatrix::identity(size_t n) {
    CMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result(k, k) = 1.0;
    }
    return result;
}

CMatrix CMatrix::adjoint() const {
    CMatrix result(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

CMatrix CMatrix::operator*(const CMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("CMatrix: shape mismatch in product");
    }
    CMatrix result(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            const cplx a = (*this)(r, k);
            if (a == cplx{}) {
                continue;
            }
            for (size_t c = 0; c < rhs.cols_; c++) {
                result(r, c) += a * rhs(k, c);
            }
        }
    }
    return result;
}

CMatrix CMatrix::abs_squared() const {
    CMatrix result(rows_, cols_);
    for (size_t k = 0; k < data_.size(); k++) {
        result.data_[k] = std::norm(data_[k]);
    }
    return result;
}

bool CMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

void TransferMatrix::validate() const {
    if (!elements.is_square()) {
        throw std::invalid_argument("transfer matrix must be square");
    }
    if (elements.rows() == 0) {
        throw std::invalid_argument("transfer matrix must have at least one mode");
    }
    if (!elements.all_finite()) {
        throw std::invalid_argument("transfer matrix has non-finite elements");
    }
}

namespace {

CMatrix gram(const CMatrix &m) {
    // M^dagger M, computed column against column.
    const size_t n = m.cols();
    CMatrix p(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i; j < n; j++) {
            cplx acc = 0.0;
            for (size_t r = 0; r < m.rows(); r++) {
                acc += std::conj(m(r, i)) * m(r, j);
            }
            p(i, j) = acc;
            p(j, i) = std::conj(acc);
        }
    }
    return p;
}

double spectral_norm_hermitian(const CMatrix &h) {
    const size_t n = h.rows();
    std::vector<cplx> v(n), w(n);
    for (size_t k = 0; k < n; k++) {
        // Deterministic, generic start vector.
        v[k] = cplx(1.0 + 0.1 * static_cast<double>(k % 7), 0.05 * static_cast<double>(k % 3));
    }
    double lambda = 0.0;
    for (int iter = 0; iter < 500; iter++) {
        double norm = 0.0;
        for (size_t k = 0; k < n; k++) {
            norm += std::norm(v[k]);
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            return 0.0;
        }
        for (auto &z : v) {
            z /= norm;
        }
        for (size_t r = 0; r < n; r++) {
            cplx acc = 0.0;
            for (size_t c = 0; c < n; c++) {
                acc += h(r, c) * v[c];
            }
            w[r] = acc;
        }
        double next = 0.0;
        for (size_t k = 0; k < n; k++) {
            next += std::norm(w[k]);
        }
        next = std::sqrt(next);
        std::swap(v, w);
        if (std::abs(next - lambda) <= 1e-15 + 1e-12 * next) {
            return next;
        }
        lambda = next;
    }
    return lambda;
}

}  // namespace

UnitarityReport unitarity_report(const CMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("unitarity_report: matrix must be square");
    }
    const size_t n = m.rows();
    CMatrix p = gram(m);
    UnitarityReport report;
    double off_sum = 0.0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i == j) {
                report.max_diagonal_deviation = std::max(report.max_diagonal_deviation, std::abs(p(i, i) - 1.0));
                continue;
            }
            const double a = std::abs(p(i, j));
            off_sum += a;
            report.max_offdiagonal = std::max(report.max_offdiagonal, a);
        }
    }
    if (n > 1) {
        report.mean_offdiagonal = off_sum / static_cast<double>(n * (n - 1));
    }
    for (size_t k = 0; k < n; k++) {
        p(k, k) -= 1.0;
    }
    report.spectral_deviation = spectral_norm_hermitian(p);
    return report;
}

double unitarity_deviation(const CMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("unitarity_deviation: matrix must be square");
    }
    const size_t n = m.rows();
    if (n < 2) {
        return 0.0;
    }
    double off_sum = 0.0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            cplx acc = 0.0;
            for (size_t r = 0; r < n; r++) {
                acc += std::conj(m(r, i)) * m(r, j);
            }
            off_sum += 2.0 * std::abs(acc);
        }
    }
    return off_sum / static_cast<double>(n * (n - 1));
}

TransferMatrix haar_unitary(size_t m, uint64_t seed) {
    if (m == 0) {
        throw std::invalid_argument("haar_unitary: mode count must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    // Column-major scratch so Gram-Schmidt walks contiguous memory.
    std::vector<std::vector<cplx>> cols(m, std::vector<cplx>(m));
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            cols[c][r] = cplx(re, im);
        }
    }
    for (size_t c = 0; c < m; c++) {
        auto &v = cols[c];
        for (int pass = 0; pass < 2; pass++) {
            for (size_t k = 0; k < c; k++) {
                const auto &q = cols[k];
                cplx proj = 0.0;
                for (size_t r = 0; r < m; r++) {
                    proj += std::conj(q[r]) * v[r];
                }
                for (size_t r = 0; r < m; r++) {
                    v[r] -= proj * q[r];
                }
            }
        }
        double norm = 0.0;
        for (const auto &z : v) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (auto &z : v) {
            z /= norm;
        }
    }
    TransferMatrix result{CMatrix(m, m), true};
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            result.elements(r, c) = cols[c][r];
        }
    }
    return result;
}

uint64_t fingerprint(const CMatrix &m) {
    uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](uint64_t word) {
        for (int b = 0; b < 8; b++) {
            h ^= (word >> (8 * b)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(m.rows());
    mix(m.cols());
    for (const auto &z : m.data()) {
        mix(std::bit_cast<uint64_t>(z.real()));
        mix(std::bit_cast<uint64_t>(z.imag()));
    }
    return h;
}

CMatrix scattering_submatrix(const CMatrix &u, std::span<const int> input_ports, std::span<const int> output_modes) {
    if (input_ports.size() != output_modes.size()) {
        throw std::invalid_argument(
            "scattering_submatrix: output photon count " + std::to_string(output_modes.size()) +
            " differs from input photon count " + std::to_string(input_ports.size()));
    }
    const size_t n = input_ports.size();
    const int m = static_cast<int>(u.rows());
    CMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        const int d = output_modes[k];
        if (d < 0 || d >= m) {
            throw std::invalid_argument("scattering_submatrix: output mode out of range");
        }
        for (size_t j = 0; j < n; j++) {
            const int c = input_ports[j];
            if (c < 0 || c >= static_cast<int>(u.cols())) {
                throw std::invalid_argument("scattering_submatrix: input mode out of range");
            }
            result(k, j) = u(static_cast<size_t>(d), static_cast<size_t>(c));
        }
    }
    return result;
}

CMatrix scattering_submatrix(const TransferMatrix &u, const InputConfig &input, const OutputState &output) {
    if (input.modes() != static_cast<int>(u.modes()) || output.modes() != static_cast<int>(u.modes())) {
        throw std::invalid_argument("scattering_submatrix: mode count mismatch with transfer matrix");
    }
    return scattering_submatrix(u.elements, input.ports(), output.mode_list());
}

}  // namespace bosim
