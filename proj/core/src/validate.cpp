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

#include "bosim/validate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "bosim/csv.hpp"
#include "bosim/matrix_io.hpp"
#include "bosim/sampling.hpp"
#include "json.hpp"

namespace bosim {

std::string_view to_string(TraceKind kind) {
    return kind == TraceKind::bayes_confidence ? "bayes_confidence" : "rne_score_fraction";
}

namespace {

struct Likelihoods {
    double q = 0.0;
    double d = 0.0;
};

Likelihoods likelihoods(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes,
                        const std::vector<std::pair<std::vector<int>, double>> &subsets) {
    Likelihoods l;
    if (subsets.empty()) {
        l.q = prob_output(u, ports, out_modes);
        l.d = prob_output_distinguishable(u, ports, out_modes);
        return l;
    }
    std::vector<int> chosen(out_modes.size());
    for (const auto &[subset, weight] : subsets) {
        for (size_t k = 0; k < subset.size(); k++) {
            chosen[k] = ports[static_cast<size_t>(subset[k])];
        }
        l.q += weight * prob_output(u, chosen, out_modes);
        l.d += weight * prob_output_distinguishable(u, chosen, out_modes);
    }
    return l;
}

double log_ratio(const Likelihoods &l) {
    if (l.q <= 0.0 && l.d <= 0.0) {
        throw std::domain_error("bayes: draw has zero likelihood under both hypotheses (wrong matrix or input?)");
    }
    return std::log(l.q) - std::log(l.d);
}

void check_draws(const CMatrix &u, std::span<const int> ports, const SampleSet &draws) {
    if (!u.is_square() || u.rows() == 0) {
        throw std::invalid_argument("validate: matrix must be square and nonempty");
    }
    if (ports.empty() || ports.size() > u.rows()) {
        throw std::invalid_argument("validate: input must hold between 1 and m ports");
    }
    for (int p : ports) {
        if (p < 0 || static_cast<size_t>(p) >= u.rows()) {
            throw std::invalid_argument("validate: input port out of range");
        }
    }
    if (draws.header().m != static_cast<int>(u.rows())) {
        throw std::invalid_argument("validate: sample mode count does not match the matrix");
    }
    if (draws.photons() < 1 || static_cast<size_t>(draws.photons()) > ports.size()) {
        throw std::invalid_argument("validate: draws hold more photons than input ports");
    }
}

}  // namespace

double bayes_log_ratio(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes) {
    return log_ratio(likelihoods(u, ports, out_modes, {}));
}

ValidationTrace bayes_trace(const CMatrix &u, std::span<const int> ports, const SampleSet &draws, unsigned workers) {
    check_draws(u, ports, draws);
    if (draws.photons() > kMaxSamplerPhotons) {
        throw std::domain_error("bayes: photon number exceeds the permanent guard");
    }
    std::vector<std::pair<std::vector<int>, double>> subsets;
    if (static_cast<size_t>(draws.photons()) < ports.size()) {
        subsets = SurvivorSubsets(static_cast<int>(ports.size()), draws.photons()).enumerate();
    }
    const size_t count = draws.size();
    std::vector<Likelihoods> per_draw(count);
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<size_t>(workers, std::max<size_t>(count, 1)));
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; i++) {
            per_draw[i] = likelihoods(u, ports, draws.draw(i), subsets);
        }
    };
    if (workers <= 1) {
        work(0, count);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(work, count * w / workers, count * (w + 1) / workers);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    ValidationTrace trace;
    trace.kind = TraceKind::bayes_confidence;
    trace.index.reserve(count);
    trace.statistic.reserve(count);
    trace.raw.reserve(count);
    double log_odds = 0.0;
    for (size_t i = 0; i < count; i++) {
        log_odds += log_ratio(per_draw[i]);
        if (std::isnan(log_odds)) {
            throw std::domain_error("bayes: draws are impossible under both hypotheses jointly");
        }
        trace.index.push_back(i + 1);
        trace.statistic.push_back(1.0 / (1.0 + std::exp(-log_odds)));
        trace.raw.push_back(log_odds);
    }
    return trace;
}

double row_norm_estimator(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes) {
    const double scale = static_cast<double>(u.rows()) / static_cast<double>(ports.size());
    double r = 1.0;
    for (int d : out_modes) {
        double norm = 0.0;
        for (int c : ports) {
            norm += std::norm(u(static_cast<size_t>(d), static_cast<size_t>(c)));
        }
        r *= scale * norm;
    }
    return r;
}

ValidationTrace rne_trace(const CMatrix &u, std::span<const int> ports, const SampleSet &draws) {
    check_draws(u, ports, draws);
    ValidationTrace trace;
    trace.kind = TraceKind::rne_score_fraction;
    uint64_t above = 0;
    for (size_t i = 0; i < draws.size(); i++) {
        const double r = row_norm_estimator(u, ports, draws.draw(i));
        if (r > 1.0) {
            above++;
        }
        trace.index.push_back(i + 1);
        trace.statistic.push_back(static_cast<double>(above) / static_cast<double>(i + 1));
        trace.raw.push_back(r);
    }
    return trace;
}

std::string trace_to_csv(const ValidationTrace &trace, const ValidationTrace *paired) {
    if (paired != nullptr && paired->size() != trace.size()) {
        throw std::invalid_argument("trace_to_csv: paired trace length differs");
    }
    std::string out = paired ? "draw_index,statistic,paired_statistic\n" : "draw_index,statistic\n";
    for (size_t i = 0; i < trace.size(); i++) {
        out += std::to_string(trace.index[i]);
        out.push_back(',');
        out += format_double(trace.statistic[i]);
        if (paired) {
            out.push_back(',');
            out += format_double(paired->statistic[i]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string trace_raw_to_csv(const ValidationTrace &trace) {
    std::string out = "draw_index,raw\n";
    for (size_t i = 0; i < trace.size(); i++) {
        out += std::to_string(trace.index[i]);
        out.push_back(',');
        out += format_double(trace.raw[i]);
        out.push_back('\n');
    }
    return out;
}

std::string trace_metadata_json(const TraceMetadata &meta) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(meta.kind));
    j["hypothesis"] = meta.hypothesis;
    j["alternative"] = meta.alternative;
    j["prior"] = meta.prior;
    j["matrix_hash"] = hash_hex(meta.matrix_hash);
    j["draws"] = meta.draws;
    if (!meta.paired.empty()) {
        j["paired"] = meta.paired;
    }
    j["version"] = std::string(kVersion);
    return j.dump(2) + "\n";
}

}  // namespace bosim
