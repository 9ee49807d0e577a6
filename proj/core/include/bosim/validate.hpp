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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bosim/matrix.hpp"
#include "bosim/states.hpp"

namespace bosim {

enum class TraceKind { bayes_confidence, rne_score_fraction };

std::string_view to_string(TraceKind kind);

struct ValidationTrace {
    TraceKind kind = TraceKind::bayes_confidence;
    /// 1-based draw index, one entry per draw.
    std::vector<uint64_t> index;
    std::vector<double> statistic;
    /// Cumulative log-odds (bayes) or the per-draw R (rne).
    std::vector<double> raw;

    size_t size() const { return index.size(); }
    double final_value() const { return statistic.empty() ? 0.0 : statistic.back(); }
};

/// Equal-prior Bayesian test of indistinguishable against distinguishable
/// photons. For lossy sets (fewer detected photons than input ports) each
/// likelihood is averaged uniformly over the detected subsets of the inputs.
///
/// Throws std::domain_error on a draw impossible under both hypotheses.
ValidationTrace bayes_trace(const CMatrix &u, std::span<const int> ports, const SampleSet &draws,
                            unsigned workers = 1);

/// Log-likelihood ratio log(L_q / L_d) of a single draw.
double bayes_log_ratio(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes);

/// R = prod_k (m / |ports|) sum_j |u[d_k][c_j]|^2.
double row_norm_estimator(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes);

/// Running fraction of draws with R > 1.
ValidationTrace rne_trace(const CMatrix &u, std::span<const int> ports, const SampleSet &draws);

/// `draw_index,statistic` rows; a paired trace adds a `paired_statistic` column.
std::string trace_to_csv(const ValidationTrace &trace, const ValidationTrace *paired = nullptr);
/// `draw_index,raw` rows.
std::string trace_raw_to_csv(const ValidationTrace &trace);

struct TraceMetadata {
    TraceKind kind = TraceKind::bayes_confidence;
    std::string hypothesis;
    std::string alternative;
    uint64_t matrix_hash = 0;
    double prior = 0.5;
    uint64_t draws = 0;
    std::string paired;
};

std::string trace_metadata_json(const TraceMetadata &meta);

}  // namespace bosim
