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

#include "bosim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bosim {

namespace {

template <typename Both, typename OnlyOne>
void merge_supports(const Pmf &p, const Pmf &q, Both both, OnlyOne only) {
    size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size() || (i < p.size() && colex_less(p.outcome(i), q.outcome(j)))) {
            only(p.probability(i++));
        } else if (i == p.size() || colex_less(q.outcome(j), p.outcome(i))) {
            only(q.probability(j++));
        } else {
            both(p.probability(i++), q.probability(j++));
        }
    }
}

}  // namespace

double fidelity(const Pmf &p, const Pmf &q) {
    if (p.photons() != q.photons()) {
        return 0.0;
    }
    double f = 0.0;
    merge_supports(p, q, [&](double a, double b) { f += std::sqrt(a * b); }, [](double) {});
    return f;
}

double tvd(const Pmf &p, const Pmf &q) {
    if (p.photons() != q.photons()) {
        return 0.5 * (p.total() + q.total());
    }
    double d = 0.0;
    merge_supports(p, q, [&](double a, double b) { d += std::abs(a - b); }, [&](double a) { d += a; });
    return 0.5 * d;
}

Pmf empirical_distribution(const SampleSet &samples) {
    if (samples.empty()) {
        throw std::invalid_argument("empirical_distribution: empty sample set");
    }
    std::vector<uint32_t> order(samples.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return colex_less(samples.draw(a), samples.draw(b)); });
    Pmf pmf(samples.header().m, samples.photons());
    const double inv = 1.0 / static_cast<double>(samples.size());
    size_t k = 0;
    while (k < order.size()) {
        size_t end = k + 1;
        while (end < order.size() && !colex_less(samples.draw(order[k]), samples.draw(order[end]))) {
            end++;
        }
        pmf.push_back(samples.draw(order[k]), static_cast<double>(end - k) * inv);
        k = end;
    }
    return pmf;
}

BigCount binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigCount result = 1;
    for (uint64_t i = 1; i <= k; i++) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigCount state_space_size(int m, int n, OutcomeSpace space) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("state_space_size: m and n must be positive");
    }
    const auto um = static_cast<uint64_t>(m);
    const auto un = static_cast<uint64_t>(n);
    return space == OutcomeSpace::full ? binomial(um + un - 1, un) : binomial(um, un);
}

BigCount hilbert_dimension(int m, int n) {
    if (m < 1 || n < 0) {
        throw std::invalid_argument("hilbert_dimension: m must be positive");
    }
    return boost::multiprecision::pow(BigCount(m), static_cast<unsigned>(n));
}

double log2_big(const BigCount &x) {
    if (x <= 0) {
        throw std::invalid_argument("log2_big: argument must be positive");
    }
    const size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 53) {
        return std::log2(x.convert_to<double>());
    }
    const size_t shift = bits - 53;
    const BigCount top = x >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

std::string to_decimal(const BigCount &x) { return x.str(); }

double expected_rate(double pulse_rate, int n_sent, int n_detect, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::invalid_argument("expected_rate: eta must lie in (0, 1)");
    }
    if (n_detect < 0 || n_detect > n_sent) {
        throw std::invalid_argument("expected_rate: need 0 <= n_detect <= n_sent");
    }
    const double c = binomial(static_cast<uint64_t>(n_sent), static_cast<uint64_t>(n_detect)).convert_to<double>();
    return pulse_rate * c * std::pow(eta, n_detect) * std::pow(1.0 - eta, n_sent - n_detect);
}

double eta_from_point(double rate, double pulse_rate, int n) {
    if (!(rate > 0.0 && pulse_rate > 0.0) || n < 1) {
        throw std::invalid_argument("eta_from_point: rates and n must be positive");
    }
    return std::pow(rate / pulse_rate, 1.0 / n);
}

RateFit fit_rate_model(int n1, double rate1, int n2, double rate2) {
    if (n1 == n2 || n1 < 1 || n2 < 1 || !(rate1 > 0.0 && rate2 > 0.0)) {
        throw std::invalid_argument("fit_rate_model: need two positive rates at distinct photon numbers");
    }
    RateFit fit;
    fit.eta = std::pow(rate2 / rate1, 1.0 / (n2 - n1));
    fit.pulse_rate = rate1 / std::pow(fit.eta, n1);
    return fit;
}

ScoreReport score(const Pmf &truth, const SampleSet &samples, OutcomeSpace space) {
    const Pmf observed = empirical_distribution(samples);
    ScoreReport r;
    r.fidelity = fidelity(observed, truth);
    r.distance = tvd(observed, truth);
    r.draws = samples.size();
    r.support = observed.size();
    r.space_size = state_space_size(samples.header().m, samples.photons(), space);
    r.bias_warning = BigCount(r.draws) < 10 * r.space_size;
    return r;
}

}  // namespace bosim
