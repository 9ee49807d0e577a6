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

#include <functional>
#include <span>
#include <vector>

namespace bosim {

/// Survival function of the Kolmogorov distribution, P(K > lambda).
double kolmogorov_survival(double lambda);

struct KsResult {
    double statistic = 0.0;
    double pvalue = 1.0;
};

/// One-sample Kolmogorov-Smirnov test of `values` against a continuous CDF.
/// The p-value uses the asymptotic distribution with Stephens' small-sample
/// correction.
KsResult ks_test(std::vector<double> values, const std::function<double(double)> &cdf);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_survival(double statistic, double dof);

/// Pearson chi-square test of observed counts against expected counts.
struct ChiSquareResult {
    double statistic = 0.0;
    double dof = 0.0;
    double pvalue = 1.0;
};
ChiSquareResult chi_square_test(std::span<const double> observed, std::span<const double> expected);

}  // namespace bosim
