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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bosim/pmf.hpp"
#include "bosim/states.hpp"

namespace bosim {

/// F = sum_i sqrt(p_i q_i) over the union of supports.
double fidelity(const Pmf &p, const Pmf &q);
/// D = sum_i |p_i - q_i| / 2 over the union of supports.
double tvd(const Pmf &p, const Pmf &q);

/// Frequency estimate over the observed outcomes. Throws on an empty set.
Pmf empirical_distribution(const SampleSet &samples);

using BigCount = boost::multiprecision::cpp_int;

BigCount binomial(uint64_t n, uint64_t k);
/// C(m+n-1, n) for the full space, C(m, n) when collision-free.
BigCount state_space_size(int m, int n, OutcomeSpace space);
/// m^n, the dimension seen by n distinguishable particles.
BigCount hilbert_dimension(int m, int n);
double log2_big(const BigCount &x);
std::string to_decimal(const BigCount &x);

/// pulse_rate * C(n_sent, n_detect) * eta^n_detect * (1-eta)^(n_sent-n_detect).
double expected_rate(double pulse_rate, int n_sent, int n_detect, double eta);

/// eta solving rate = pulse_rate * eta^n for a lossless n-photon coincidence.
double eta_from_point(double rate, double pulse_rate, int n);

struct RateFit {
    double pulse_rate = 0.0;
    double eta = 0.0;
};

/// Solves the standard (no tolerated loss) model through two (n, rate) points
/// with both the pulse rate and eta free.
RateFit fit_rate_model(int n1, double rate1, int n2, double rate2);

struct ScoreReport {
    double fidelity = 0.0;
    double distance = 0.0;
    uint64_t draws = 0;
    /// Distinct observed outcomes.
    uint64_t support = 0;
    BigCount space_size;
    /// Set when draws < 10 x space size: plug-in estimates are biased there.
    bool bias_warning = false;
};

ScoreReport score(const Pmf &truth, const SampleSet &samples, OutcomeSpace space);

}  // namespace bosim
