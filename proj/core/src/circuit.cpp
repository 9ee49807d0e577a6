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

#include "bosim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bosim/csv.hpp"
#include "bosim/matrix_io.hpp"
#include "bosim/stats.hpp"
#include "json.hpp"

namespace bosim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhaseSlack = 1e-12;

bool phase_in_range(double phi) { return std::isfinite(phi) && phi > -kPi && phi <= kPi + kPhaseSlack; }

void check_mode(int mode, int m) {
    if (mode < 0 || mode >= m) {
        throw std::invalid_argument("circuit: mode " + std::to_string(mode + 1) + " out of range for " +
                                    std::to_string(m) + " modes");
    }
}

}  // namespace

void CircuitDescription::validate() const {
    if (m < 1) {
        throw std::invalid_argument("circuit: mode count must be positive");
    }
    for (const auto &op : ops) {
        if (const auto *bs = std::get_if<BeamSplitterOp>(&op)) {
            check_mode(bs->mode_a, m);
            check_mode(bs->mode_b, m);
            if (bs->mode_a == bs->mode_b) {
                throw std::invalid_argument("circuit: beam splitter needs two distinct modes");
            }
            if (!(bs->transmissivity >= 0.0 && bs->transmissivity <= 1.0)) {
                throw std::invalid_argument("circuit: transmissivity must lie in [0, 1]");
            }
            if (!phase_in_range(bs->phase)) {
                throw std::invalid_argument("circuit: beam splitter phase must lie in (-pi, pi]");
            }
        } else {
            const auto &ps = std::get<PhaseShiftOp>(op);
            check_mode(ps.mode, m);
            if (!phase_in_range(ps.phase)) {
                throw std::invalid_argument("circuit: phase shift must lie in (-pi, pi]");
            }
        }
    }
}

TransferMatrix compose(const CircuitDescription &circuit) {
    circuit.validate();
    const size_t m = static_cast<size_t>(circuit.m);
    CMatrix u = CMatrix::identity(m);
    for (const auto &op : circuit.ops) {
        if (const auto *bs = std::get_if<BeamSplitterOp>(&op)) {
            const double t = std::sqrt(bs->transmissivity);
            const double r = std::sqrt(1.0 - bs->transmissivity);
            const cplx e = std::polar(1.0, bs->phase);
            auto row_a = u.row(static_cast<size_t>(bs->mode_a));
            auto row_b = u.row(static_cast<size_t>(bs->mode_b));
            for (size_t c = 0; c < m; c++) {
                const cplx a = row_a[c];
                const cplx b = row_b[c];
                row_a[c] = t * a + e * r * b;
                row_b[c] = -std::conj(e) * r * a + t * b;
            }
        } else {
            const auto &ps = std::get<PhaseShiftOp>(op);
            const cplx e = std::polar(1.0, ps.phase);
            for (auto &z : u.row(static_cast<size_t>(ps.mode))) {
                z *= e;
            }
        }
    }
    return TransferMatrix{std::move(u), true};
}

CircuitDescription circuit_from_json(std::string_view text) {
    using nlohmann::json;
    CircuitDescription circuit;
    try {
        const json doc = json::parse(text);
        circuit.m = doc.at("m").get<int>();
        for (const auto &op : doc.at("ops")) {
            const std::string type = op.at("type").get<std::string>();
            if (type == "bs") {
                BeamSplitterOp bs;
                bs.mode_a = op.at("a").get<int>() - 1;
                bs.mode_b = op.at("b").get<int>() - 1;
                bs.transmissivity = op.value("t", 0.5);
                bs.phase = op.value("phi", 0.0);
                circuit.ops.emplace_back(bs);
            } else if (type == "phase") {
                PhaseShiftOp ps;
                ps.mode = op.at("mode").get<int>() - 1;
                ps.phase = op.at("phi").get<double>();
                circuit.ops.emplace_back(ps);
            } else {
                throw std::invalid_argument("circuit json: unknown op type '" + type + "'");
            }
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("circuit json: ") + e.what());
    }
    circuit.validate();
    return circuit;
}

void MeasurementSet::validate() const {
    if (m == 0) {
        throw std::invalid_argument("measurement set: empty");
    }
    if (amplitudes.size() != m * m || phases.size() != m * m) {
        throw std::invalid_argument("measurement set: amplitude and phase tables must both be m x m");
    }
    if (efficiencies.size() != m) {
        throw std::invalid_argument("measurement set: one efficiency per output detector is required");
    }
    for (double a : amplitudes) {
        if (!std::isfinite(a) || a < 0.0) {
            throw std::invalid_argument("measurement set: amplitudes must be finite and nonnegative");
        }
    }
    for (double p : phases) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("measurement set: phases must be finite");
        }
    }
    for (double e : efficiencies) {
        if (!(e > 0.0 && e <= 1.0)) {
            throw std::invalid_argument("measurement set: efficiencies must lie in (0, 1]");
        }
    }
}

MeasurementSet MeasurementSet::forward(const CMatrix &u, std::vector<double> efficiencies) {
    if (!u.is_square()) {
        throw std::invalid_argument("measurement set: matrix must be square");
    }
    MeasurementSet meas;
    meas.m = u.rows();
    meas.efficiencies = std::move(efficiencies);
    if (meas.efficiencies.empty()) {
        meas.efficiencies.assign(meas.m, 1.0);
    }
    meas.amplitudes.resize(meas.m * meas.m);
    meas.phases.resize(meas.m * meas.m);
    for (size_t r = 0; r < meas.m; r++) {
        for (size_t c = 0; c < meas.m; c++) {
            meas.amplitudes[r * meas.m + c] = std::sqrt(meas.efficiencies.at(r)) * std::abs(u(r, c));
            meas.phases[r * meas.m + c] = std::arg(u(r, c));
        }
    }
    meas.validate();
    return meas;
}

std::string_view to_string(NoiseModel n) { return n == NoiseModel::additive ? "additive" : "multiplicative"; }

NoiseModel parse_noise_model(std::string_view text) {
    if (text == "additive") {
        return NoiseModel::additive;
    }
    if (text == "multiplicative") {
        return NoiseModel::multiplicative;
    }
    throw std::invalid_argument("unknown noise model '" + std::string(text) + "'");
}

MeasurementSet perturb_amplitudes(const MeasurementSet &meas, double sigma, NoiseModel model, uint64_t seed) {
    meas.validate();
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("perturb_amplitudes: sigma must be finite and nonnegative");
    }
    const size_t m = meas.m;
    std::vector<double> scale(m, 1.0);
    if (model == NoiseModel::additive) {
        for (size_t c = 0; c < m; c++) {
            double norm = 0.0;
            for (size_t r = 0; r < m; r++) {
                norm += meas.amplitude(r, c) * meas.amplitude(r, c);
            }
            scale[c] = std::sqrt(norm);
        }
    }
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    MeasurementSet out = meas;
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            double &a = out.amplitudes[r * m + c];
            const double g = normal(engine);
            a = model == NoiseModel::additive ? a + sigma * scale[c] * g : a * (1.0 + sigma * g);
            a = std::abs(a);
        }
    }
    return out;
}

namespace {

NumericTable square_table(const std::vector<double> &flat, size_t m) {
    NumericTable t(m, std::vector<double>(m));
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            t[r][c] = flat[r * m + c];
        }
    }
    return t;
}

std::vector<double> flatten_square(const NumericTable &t, const std::string &what) {
    const size_t m = t.size();
    std::vector<double> flat;
    flat.reserve(m * m);
    for (const auto &row : t) {
        if (row.size() != m) {
            throw std::invalid_argument("measurement " + what + ": expected a square table");
        }
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

}  // namespace

void write_measurements(const std::filesystem::path &dir, const MeasurementSet &meas) {
    meas.validate();
    std::filesystem::create_directories(dir);
    write_text_file(dir / "amplitudes.csv", format_csv_table(square_table(meas.amplitudes, meas.m)));
    write_text_file(dir / "phases.csv", format_csv_table(square_table(meas.phases, meas.m)));
    std::string eff = "efficiency\n";
    for (double e : meas.efficiencies) {
        eff += format_double(e) + "\n";
    }
    write_text_file(dir / "efficiencies.csv", eff);
}

MeasurementSet read_measurements(const std::filesystem::path &amplitudes, const std::filesystem::path &phases,
                                 const std::filesystem::path &efficiencies) {
    MeasurementSet meas;
    const NumericTable a = read_csv_table(amplitudes);
    meas.m = a.size();
    meas.amplitudes = flatten_square(a, "amplitudes");
    meas.phases = flatten_square(read_csv_table(phases), "phases");
    if (efficiencies.empty()) {
        meas.efficiencies.assign(meas.m, 1.0);
    } else {
        meas.efficiencies = read_csv_vector(efficiencies);
    }
    meas.validate();
    return meas;
}

std::string_view to_string(Normalization n) { return n == Normalization::per_column ? "column" : "global"; }

Normalization parse_normalization(std::string_view text) {
    if (text == "column" || text == "per-column" || text == "per_column") {
        return Normalization::per_column;
    }
    if (text == "global") {
        return Normalization::global;
    }
    throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

Reconstruction reconstruct(const MeasurementSet &meas, Normalization normalization) {
    meas.validate();
    const size_t m = meas.m;
    std::vector<double> a(m * m);
    for (size_t r = 0; r < m; r++) {
        const double corr = 1.0 / std::sqrt(meas.efficiencies[r]);
        for (size_t c = 0; c < m; c++) {
            a[r * m + c] = meas.amplitude(r, c) * corr;
        }
    }
    std::vector<double> col_norm(m, 0.0);
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            col_norm[c] += a[r * m + c] * a[r * m + c];
        }
    }
    for (size_t c = 0; c < m; c++) {
        if (!(col_norm[c] > 0.0)) {
            throw std::invalid_argument("reconstruct: input mode " + std::to_string(c + 1) + " recorded no light");
        }
    }
    if (normalization == Normalization::per_column) {
        for (size_t r = 0; r < m; r++) {
            for (size_t c = 0; c < m; c++) {
                a[r * m + c] /= std::sqrt(col_norm[c]);
            }
        }
    } else {
        double total = 0.0;
        for (double v : col_norm) {
            total += v;
        }
        const double scale = std::sqrt(static_cast<double>(m) / total);
        for (double &v : a) {
            v *= scale;
        }
    }
    Reconstruction rec;
    rec.normalization = normalization;
    rec.matrix.elements = CMatrix(m, m);
    rec.matrix.unitary = false;
    const double ref = meas.phase(0, 0);
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < m; c++) {
            const double theta = meas.phase(r, c) - meas.phase(r, 0) - meas.phase(0, c) + ref;
            rec.matrix.elements(r, c) = std::polar(a[r * m + c], theta);
        }
    }
    return rec;
}

double haar_modulus_cdf(double r, size_t m) {
    if (r <= 0.0) {
        return 0.0;
    }
    if (r >= 1.0) {
        return 1.0;
    }
    return 1.0 - std::pow(1.0 - r * r, static_cast<double>(m - 1));
}

namespace {

Histogram histogram(const std::vector<double> &values, double lo, double hi, size_t bins,
                    const std::function<double(double)> &cdf) {
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.observed.assign(bins, 0.0);
    h.expected.assign(bins, 0.0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double v : values) {
        auto k = static_cast<long>(std::floor((v - lo) / width));
        k = std::clamp<long>(k, 0, static_cast<long>(bins) - 1);
        h.observed[static_cast<size_t>(k)] += 1.0;
    }
    const double n = static_cast<double>(values.size());
    for (size_t k = 0; k < bins; k++) {
        const double a = lo + width * static_cast<double>(k);
        h.expected[k] = n * (cdf(a + width) - cdf(a));
    }
    return h;
}

}  // namespace

HaarStatisticsReport haar_statistics_test(const CMatrix &u, size_t bins) {
    if (!u.is_square() || u.rows() < 8) {
        throw std::invalid_argument("haar_statistics_test: needs a square matrix with m >= 8");
    }
    const size_t m = u.rows();
    std::vector<double> moduli;
    std::vector<double> phases;
    moduli.reserve(m * m);
    phases.reserve(m * m);
    for (const auto &z : u.data()) {
        moduli.push_back(std::abs(z));
        double phi = std::arg(z);
        if (phi <= -kPi) {
            phi += 2.0 * kPi;
        }
        phases.push_back(phi);
    }
    auto modulus_cdf = [m](double r) { return haar_modulus_cdf(r, m); };
    auto phase_cdf = [](double phi) { return std::clamp((phi + kPi) / (2.0 * kPi), 0.0, 1.0); };
    HaarStatisticsReport report;
    const KsResult amp = ks_test(moduli, modulus_cdf);
    const KsResult ph = ks_test(phases, phase_cdf);
    report.amplitude_ks = amp.statistic;
    report.amplitude_pvalue = amp.pvalue;
    report.phase_ks = ph.statistic;
    report.phase_pvalue = ph.pvalue;
    report.amplitude = histogram(moduli, 0.0, 1.0, bins, modulus_cdf);
    report.phase = histogram(phases, -kPi, kPi, bins, phase_cdf);
    return report;
}

}  // namespace bosim
