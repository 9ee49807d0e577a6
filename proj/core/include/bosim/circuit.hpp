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
#include <variant>
#include <vector>

#include "bosim/matrix.hpp"

namespace bosim {

/// Two-mode coupler acting as
///   [[ sqrt(t),                e^{i phi} sqrt(1-t) ],
///    [ -e^{-i phi} sqrt(1-t),  sqrt(t)             ]]
/// on (mode_a, mode_b), identity elsewhere.
struct BeamSplitterOp {
    int mode_a = 0;
    int mode_b = 1;
    double transmissivity = 0.5;
    double phase = 0.0;
};

/// Multiplies one mode by e^{i phi}. Mirror reflections are folded in here as
/// phi = pi; they have no op of their own.
struct PhaseShiftOp {
    int mode = 0;
    double phase = 0.0;
};

using CircuitOp = std::variant<BeamSplitterOp, PhaseShiftOp>;

struct CircuitDescription {
    int m = 0;
    std::vector<CircuitOp> ops;

    /// Throws std::invalid_argument on bad indices, t outside [0, 1] or
    /// phases outside (-pi, pi].
    void validate() const;
};

/// Product of the embedded blocks, first op applied first. Flagged unitary.
TransferMatrix compose(const CircuitDescription &circuit);

/// {"m": 4, "ops": [{"type": "bs", "a": 1, "b": 2, "t": 0.5, "phi": 0},
///                  {"type": "phase", "mode": 1, "phi": 3.14159}]}
/// Mode labels are 1-based.
CircuitDescription circuit_from_json(std::string_view text);

/// Relative moduli and phases recorded per (output, input) pair.
struct MeasurementSet {
    size_t m = 0;
    /// Row-major m x m, row = output mode. Count-derived moduli, any overall scale.
    std::vector<double> amplitudes;
    /// Row-major m x m, radians in (-pi, pi].
    std::vector<double> phases;
    /// Per output detector, in (0, 1].
    std::vector<double> efficiencies;

    void validate() const;

    double amplitude(size_t out, size_t in) const { return amplitudes[out * m + in]; }
    double phase(size_t out, size_t in) const { return phases[out * m + in]; }

    /// Noiseless measurement of `u` seen through the given detector efficiencies
    /// (amplitude_ij = sqrt(eta_i) |u_ij|, phase_ij = arg u_ij).
    static MeasurementSet forward(const CMatrix &u, std::vector<double> efficiencies);
};

enum class NoiseModel { additive, multiplicative };

std::string_view to_string(NoiseModel n);
NoiseModel parse_noise_model(std::string_view text);

/// Gaussian amplitude noise of relative size `sigma`. Additive noise is scaled
/// by each column's 2-norm (the full-scale reading for that input); multiplicative
/// noise scales each entry by (1 + sigma g). Moduli are folded back to >= 0.
MeasurementSet perturb_amplitudes(const MeasurementSet &meas, double sigma, NoiseModel model, uint64_t seed);

/// amplitudes.csv, phases.csv and efficiencies.csv inside `dir`.
void write_measurements(const std::filesystem::path &dir, const MeasurementSet &meas);
MeasurementSet read_measurements(const std::filesystem::path &amplitudes, const std::filesystem::path &phases,
                                 const std::filesystem::path &efficiencies);

enum class Normalization { per_column, global };

std::string_view to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

struct Reconstruction {
    TransferMatrix matrix;
    Normalization normalization = Normalization::per_column;
    /// Phase reference: row 0 and column 0 carry zero phase.
    std::string gauge = "row0col0";
};

/// Efficiency-corrects the moduli, normalizes (each column to unit norm, or
/// the whole matrix to total power m), and attaches phases re-referenced to
/// row 0 / column 0. The result is not flagged unitary.
///
/// Throws std::invalid_argument naming the input when a column recorded no light.
Reconstruction reconstruct(const MeasurementSet &meas, Normalization normalization = Normalization::per_column);

struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<double> observed;
    std::vector<double> expected;
};

struct HaarStatisticsReport {
    double amplitude_ks = 0.0;
    double amplitude_pvalue = 1.0;
    double phase_ks = 0.0;
    double phase_pvalue = 1.0;
    Histogram amplitude;
    Histogram phase;
};

/// CDF of one Haar-unitary entry modulus: 1 - (1 - r^2)^(m-1).
double haar_modulus_cdf(double r, size_t m);

/// KS tests of all m^2 moduli against the Haar modulus density
/// 2(m-1) r (1-r^2)^(m-2), and of all phases against uniform on (-pi, pi].
/// Requires m >= 8.
HaarStatisticsReport haar_statistics_test(const CMatrix &u, size_t bins = 20);

}  // namespace bosim
