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

#include "bosim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace bosim {

double kolmogorov_survival(double lambda) {
    if (lambda <= 0.0) {
        return 1.0;
    }
    constexpr double pi = std::numbers::pi;
    if (lambda < 1.0) {
        // P(K <= x) = sqrt(2 pi)/x sum_k exp(-(2k-1)^2 pi^2 / (8 x^2)); converges fast for small x.
        double cdf = 0.0;
        for (int k = 1; k <= 20; k++) {
            const double a = static_cast<double>(2 * k - 1);
            cdf += std::exp(-a * a * pi * pi / (8.0 * lambda * lambda));
        }
        cdf *= std::sqrt(2.0 * pi) / lambda;
        return std::clamp(1.0 - cdf, 0.0, 1.0);
    }
    double sum = 0.0;
    for (int k = 1; k <= 100; k++) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-300) {
            break;
        }
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> values, const std::function<double(double)> &cdf) {
    if (values.empty()) {
        throw std::invalid_argument("ks_test: empty sample");
    }
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (size_t i = 0; i < values.size(); i++) {
        const double f = cdf(values[i]);
        d = std::max(d, std::max(f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f));
    }
    const double root = std::sqrt(n);
    return {d, kolmogorov_survival((root + 0.12 + 0.11 / root) * d)};
}

double chi_square_survival(double statistic, double dof) {
    if (dof <= 0.0) {
        throw std::invalid_argument("chi_square_survival: dof must be positive");
    }
    if (statistic <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_test(std::span<const double> observed, std::span<const double> expected) {
    if (observed.size() != expected.size() || observed.size() < 2) {
        throw std::invalid_argument("chi_square_test: need matching bins, at least two");
    }
    ChiSquareResult r;
    for (size_t k = 0; k < observed.size(); k++) {
        if (!(expected[k] > 0.0)) {
            throw std::invalid_argument("chi_square_test: expected counts must be positive");
        }
        const double diff = observed[k] - expected[k];
        r.statistic += diff * diff / expected[k];
    }
    r.dof = static_cast<double>(observed.size() - 1);
    r.pvalue = chi_square_survival(r.statistic, r.dof);
    return r;
}

}  // namespace bosim
