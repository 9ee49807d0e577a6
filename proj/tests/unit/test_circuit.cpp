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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bosim/circuit.hpp"
#include "test_util.hpp"

namespace bosim {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Compose, EmptyIsIdentity) {
    const TransferMatrix u = compose(CircuitDescription{4, {}});
    EXPECT_TRUE(u.unitary);
    EXPECT_EQ(u.elements, CMatrix::identity(4));
}

TEST(Compose, BalancedSplitterBlock) {
    const TransferMatrix u = compose(CircuitDescription{2, {BeamSplitterOp{0, 1, 0.5, 0.0}}});
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(u(0, 0) - h), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(0, 1) - h), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 0) + h), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(1, 1) - h), 0.0, 1e-15);
}

TEST(Compose, SplitterPhaseConvention) {
    const double t = 0.3, phi = 1.1;
    const TransferMatrix u = compose(CircuitDescription{3, {BeamSplitterOp{2, 0, t, phi}}});
    const cplx e = std::polar(1.0, phi);
    EXPECT_NEAR(std::abs(u(2, 2) - std::sqrt(t)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(2, 0) - e * std::sqrt(1 - t)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(0, 2) + std::conj(e) * std::sqrt(1 - t)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(u(0, 0) - std::sqrt(t)), 0.0, 1e-15);
    EXPECT_EQ(u(1, 1), cplx(1.0));
}

TEST(Compose, MachZehnderBarAndCrossStates) {
    const BeamSplitterOp bs{0, 1, 0.5, 0.0};
    const TransferMatrix bar = compose(CircuitDescription{2, {bs, PhaseShiftOp{0, kPi}, bs}});
    EXPECT_NEAR(std::abs(bar(0, 0)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(bar(1, 1)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(bar(0, 1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(bar(1, 0)), 0.0, 1e-12);
    const TransferMatrix cross = compose(CircuitDescription{2, {bs, bs}});
    EXPECT_NEAR(std::abs(cross(0, 1)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(cross(0, 0)), 0.0, 1e-12);
}

TEST(Compose, OrderIsFirstOpFirst) {
    const BeamSplitterOp bs{0, 1, 0.5, 0.0};
    const PhaseShiftOp ps{1, kPi / 2};
    const CMatrix a = compose(CircuitDescription{2, {bs}}).elements;
    const CMatrix p = compose(CircuitDescription{2, {ps}}).elements;
    const CMatrix both = compose(CircuitDescription{2, {bs, ps}}).elements;
    EXPECT_LT(testing_util::max_abs_diff(both, p * a), 1e-15);
}

TEST(Compose, LargeMeshStaysUnitary) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> mode(0, 19);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    CircuitDescription c{20, {}};
    for (int k = 0; k < 10000; k++) {
        int a = mode(rng), b = mode(rng);
        while (b == a) {
            b = mode(rng);
        }
        const double phi = kPi * (2.0 * unit(rng) - 1.0);
        if (k % 3 == 0) {
            c.ops.emplace_back(PhaseShiftOp{a, phi});
        } else {
            c.ops.emplace_back(BeamSplitterOp{a, b, unit(rng), phi});
        }
    }
    const TransferMatrix u = compose(c);
    const CMatrix p = u.elements.adjoint() * u.elements;
    EXPECT_LT(testing_util::max_abs_diff(p, CMatrix::identity(20)), 1e-12);
}

TEST(Compose, ValidationErrors) {
    EXPECT_THROW(compose(CircuitDescription{2, {BeamSplitterOp{0, 2, 0.5, 0.0}}}), std::invalid_argument);
    EXPECT_THROW(compose(CircuitDescription{2, {BeamSplitterOp{1, 1, 0.5, 0.0}}}), std::invalid_argument);
    EXPECT_THROW(compose(CircuitDescription{2, {BeamSplitterOp{0, 1, 1.5, 0.0}}}), std::invalid_argument);
    EXPECT_THROW(compose(CircuitDescription{2, {BeamSplitterOp{0, 1, 0.5, -kPi}}}), std::invalid_argument);
    EXPECT_THROW(compose(CircuitDescription{2, {PhaseShiftOp{-1, 0.0}}}), std::invalid_argument);
    EXPECT_THROW(compose(CircuitDescription{2, {PhaseShiftOp{0, 4.0}}}), std::invalid_argument);
    EXPECT_THROW(compose(CircuitDescription{0, {}}), std::invalid_argument);
    EXPECT_NO_THROW(compose(CircuitDescription{2, {PhaseShiftOp{0, kPi}}}));
}

TEST(CircuitJson, ParsesOneBasedOps) {
    const CircuitDescription c = circuit_from_json(
        R"({"m": 3, "ops": [{"type": "bs", "a": 1, "b": 3, "t": 0.25, "phi": 0.5}, {"type": "phase", "mode": 2, "phi": -1.0}]})");
    ASSERT_EQ(c.ops.size(), 2u);
    const auto &bs = std::get<BeamSplitterOp>(c.ops[0]);
    EXPECT_EQ(bs.mode_a, 0);
    EXPECT_EQ(bs.mode_b, 2);
    EXPECT_EQ(bs.transmissivity, 0.25);
    EXPECT_EQ(std::get<PhaseShiftOp>(c.ops[1]).mode, 1);
    EXPECT_THROW(circuit_from_json(R"({"m": 2, "ops": [{"type": "mirror", "mode": 1}]})"), std::invalid_argument);
    EXPECT_THROW(circuit_from_json(R"({"m": 2, "ops": [{"type": "bs", "a": 1, "b": 3}]})"), std::invalid_argument);
    EXPECT_THROW(circuit_from_json("{"), std::invalid_argument);
}

double gauge_invariant_error(const CMatrix &a, const CMatrix &b) {
    // Compares a_ij a_00 conj(a_i0 a_0j), which no row/column phase change alters.
    double worst = 0.0;
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            const cplx x = a(i, j) * a(0, 0) * std::conj(a(i, 0) * a(0, j));
            const cplx y = b(i, j) * b(0, 0) * std::conj(b(i, 0) * b(0, j));
            worst = std::max(worst, std::abs(x - y));
        }
    }
    return worst;
}

TEST(Reconstruct, NoiselessRoundTrip) {
    const TransferMatrix u = haar_unitary(60, 21);
    const Reconstruction rec = reconstruct(MeasurementSet::forward(u.elements, {}));
    EXPECT_FALSE(rec.matrix.unitary);
    EXPECT_EQ(rec.gauge, "row0col0");
    EXPECT_LT(unitarity_deviation(rec.matrix.elements), 1e-10);
    EXPECT_LT(gauge_invariant_error(rec.matrix.elements, u.elements), 1e-12);
    for (size_t i = 0; i < 60; i++) {
        EXPECT_NEAR(std::arg(rec.matrix(i, 0)), 0.0, 1e-12);
        EXPECT_NEAR(std::arg(rec.matrix(0, i)), 0.0, 1e-12);
    }
}

TEST(Reconstruct, EfficiencyCorrectionRecoversModuli) {
    const TransferMatrix u = haar_unitary(60, 22);
    std::vector<double> eff(60);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> range(0.6, 0.82);
    for (auto &e : eff) {
        e = range(rng);
    }
    const MeasurementSet meas = MeasurementSet::forward(u.elements, eff);
    for (Normalization norm : {Normalization::per_column, Normalization::global}) {
        const Reconstruction rec = reconstruct(meas, norm);
        EXPECT_EQ(rec.normalization, norm);
        for (size_t i = 0; i < 60; i++) {
            for (size_t j = 0; j < 60; j++) {
                EXPECT_NEAR(std::abs(rec.matrix(i, j)), std::abs(u(i, j)), 1e-10);
            }
        }
        EXPECT_LT(unitarity_deviation(rec.matrix.elements), 1e-10);
    }
}

TEST(Reconstruct, ScaleFreeAmplitudes) {
    const TransferMatrix u = haar_unitary(10, 23);
    MeasurementSet meas = MeasurementSet::forward(u.elements, {});
    for (auto &a : meas.amplitudes) {
        a *= 1234.5;
    }
    EXPECT_LT(unitarity_deviation(reconstruct(meas).matrix.elements), 1e-10);
    EXPECT_LT(unitarity_deviation(reconstruct(meas, Normalization::global).matrix.elements), 1e-10);
}

TEST(Reconstruct, DarkColumnNamesTheInput) {
    MeasurementSet meas = MeasurementSet::forward(haar_unitary(8, 24).elements, {});
    for (size_t r = 0; r < 8; r++) {
        meas.amplitudes[r * 8 + 2] = 0.0;
    }
    try {
        reconstruct(meas);
        FAIL() << "expected an error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("input mode 3"), std::string::npos) << e.what();
    }
}

TEST(Reconstruct, ValidationErrors) {
    MeasurementSet meas = MeasurementSet::forward(CMatrix::identity(3), {});
    meas.efficiencies[1] = 0.0;
    EXPECT_THROW(reconstruct(meas), std::invalid_argument);
    meas.efficiencies[1] = 1.0;
    meas.amplitudes[0] = -1.0;
    EXPECT_THROW(reconstruct(meas), std::invalid_argument);
    meas.amplitudes.pop_back();
    EXPECT_THROW(reconstruct(meas), std::invalid_argument);
}

double mean_deviation(double sigma, NoiseModel model) {
    double sum = 0.0;
    for (uint64_t seed = 0; seed < 5; seed++) {
        const MeasurementSet clean = MeasurementSet::forward(haar_unitary(60, 100 + seed).elements, {});
        const MeasurementSet noisy = perturb_amplitudes(clean, sigma, model, seed);
        sum += unitarity_deviation(reconstruct(noisy).matrix.elements);
    }
    return sum / 5.0;
}

TEST(Reconstruct, AdditiveNoiseGivesPercentLevelDeviation) {
    const double d = mean_deviation(0.01, NoiseModel::additive);
    EXPECT_GT(d, 0.01 / 3.0);
    EXPECT_LT(d, 0.01 * 3.0);
}

TEST(Reconstruct, MultiplicativeNoiseIsMuchSmaller) {
    const double d = mean_deviation(0.01, NoiseModel::multiplicative);
    EXPECT_GT(d, 5e-4);
    EXPECT_LT(d, 4e-3);
}

TEST(Reconstruct, NoiseIsSeeded) {
    const MeasurementSet clean = MeasurementSet::forward(haar_unitary(6, 1).elements, {});
    EXPECT_EQ(perturb_amplitudes(clean, 0.1, NoiseModel::additive, 5).amplitudes,
              perturb_amplitudes(clean, 0.1, NoiseModel::additive, 5).amplitudes);
    EXPECT_EQ(perturb_amplitudes(clean, 0.0, NoiseModel::additive, 5).amplitudes, clean.amplitudes);
    EXPECT_THROW(perturb_amplitudes(clean, -0.1, NoiseModel::additive, 5), std::invalid_argument);
}

TEST(Reconstruct, MeasurementFilesRoundTrip) {
    testing_util::TempDir dir("meas");
    std::vector<double> eff{0.6, 0.7, 0.8, 0.9};
    const MeasurementSet meas = MeasurementSet::forward(haar_unitary(4, 2).elements, eff);
    write_measurements(dir.path(), meas);
    const MeasurementSet back =
        read_measurements(dir / "amplitudes.csv", dir / "phases.csv", dir / "efficiencies.csv");
    EXPECT_EQ(back.amplitudes, meas.amplitudes);
    EXPECT_EQ(back.phases, meas.phases);
    EXPECT_EQ(back.efficiencies, meas.efficiencies);
    const MeasurementSet unit = read_measurements(dir / "amplitudes.csv", dir / "phases.csv", {});
    EXPECT_EQ(unit.efficiencies, std::vector<double>(4, 1.0));
}

TEST(HaarStatistics, HaarMatricesPass) {
    int passing = 0;
    for (uint64_t seed = 0; seed < 100; seed++) {
        const HaarStatisticsReport r = haar_statistics_test(haar_unitary(60, seed).elements);
        if (r.amplitude_pvalue > 0.01 && r.phase_pvalue > 0.01) {
            passing++;
        }
    }
    EXPECT_GE(passing, 95);
}

TEST(HaarStatistics, IdentityFailsAmplitudes) {
    EXPECT_LT(haar_statistics_test(CMatrix::identity(60)).amplitude_pvalue, 1e-6);
}

TEST(HaarStatistics, ZeroedPhasesFailPhaseTest) {
    CMatrix u = haar_unitary(60, 5).elements;
    for (auto &z : u.data()) {
        z = std::abs(z);
    }
    const HaarStatisticsReport r = haar_statistics_test(u);
    EXPECT_LT(r.phase_pvalue, 1e-6);
    EXPECT_GT(r.amplitude_pvalue, 1e-3);
}

TEST(HaarStatistics, PermutationInvariant) {
    const CMatrix u = haar_unitary(16, 6).elements;
    CMatrix v(16, 16);
    for (size_t r = 0; r < 16; r++) {
        for (size_t c = 0; c < 16; c++) {
            v(r, c) = u((r * 5 + 3) % 16, (c * 7 + 1) % 16);
        }
    }
    const HaarStatisticsReport a = haar_statistics_test(u);
    const HaarStatisticsReport b = haar_statistics_test(v);
    EXPECT_EQ(a.amplitude_ks, b.amplitude_ks);
    EXPECT_EQ(a.phase_ks, b.phase_ks);
}

TEST(HaarStatistics, HistogramsAccountForEveryEntry) {
    const HaarStatisticsReport r = haar_statistics_test(haar_unitary(20, 7).elements, 10);
    ASSERT_EQ(r.amplitude.observed.size(), 10u);
    double obs = 0.0, exp = 0.0;
    for (size_t k = 0; k < 10; k++) {
        obs += r.amplitude.observed[k];
        exp += r.amplitude.expected[k];
    }
    EXPECT_EQ(obs, 400.0);
    EXPECT_NEAR(exp, 400.0, 1e-9);
    EXPECT_THROW(haar_statistics_test(CMatrix::identity(7)), std::invalid_argument);
}

TEST(HaarStatistics, ModulusCdf) {
    EXPECT_EQ(haar_modulus_cdf(0.0, 60), 0.0);
    EXPECT_EQ(haar_modulus_cdf(1.0, 60), 1.0);
    EXPECT_NEAR(haar_modulus_cdf(0.5, 2), 0.25, 1e-15);
}

}  // namespace
}  // namespace bosim
