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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "bosim/circuit.hpp"
#include "bosim/csv.hpp"
#include "bosim/matrix.hpp"
#include "bosim/matrix_io.hpp"
#include "bosim/metrics.hpp"
#include "bosim/sample_io.hpp"
#include "bosim/sampling.hpp"
#include "bosim/states.hpp"
#include "bosim/validate.hpp"
#include "json.hpp"

namespace bosim::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr uint64_t kChunk = 1 << 14;

int to_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw std::invalid_argument("bad mode label '" + std::string(s) + "'");
    }
    return v;
}

unsigned default_workers() {
    if (const char *env = std::getenv("BOSIM_WORKERS")) {
        const int w = to_int(env);
        if (w < 1) {
            throw std::invalid_argument("BOSIM_WORKERS must be a positive integer");
        }
        return static_cast<unsigned>(w);
    }
    return 1;
}

std::string provenance_line(uint64_t hash) {
    return "# bosim " + std::string(kVersion) + " matrix_hash " + hash_hex(hash) + "\n";
}

void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json unitarity_json(const CMatrix &u) {
    const UnitarityReport r = unitarity_report(u);
    Json j;
    j["unitarity_deviation"] = r.mean_offdiagonal;
    j["max_offdiagonal"] = r.max_offdiagonal;
    j["max_diagonal_deviation"] = r.max_diagonal_deviation;
    j["spectral_deviation"] = r.spectral_deviation;
    return j;
}

Json histogram_json(const Histogram &h) {
    Json j;
    j["lo"] = h.lo;
    j["hi"] = h.hi;
    j["observed"] = h.observed;
    j["expected"] = h.expected;
    return j;
}

Json matrix_report(const CMatrix &u, bool histograms) {
    Json j;
    j["version"] = std::string(kVersion);
    j["matrix_hash"] = hash_hex(fingerprint(u));
    j["m"] = u.rows();
    const Json unitarity = unitarity_json(u);
    for (auto &[k, v] : unitarity.items()) {
        j[k] = v;
    }
    if (u.rows() >= 8) {
        const HaarStatisticsReport h = haar_statistics_test(u);
        j["amplitude_ks"] = h.amplitude_ks;
        j["amplitude_pvalue"] = h.amplitude_pvalue;
        j["phase_ks"] = h.phase_ks;
        j["phase_pvalue"] = h.phase_pvalue;
        if (histograms) {
            j["amplitude_histogram"] = histogram_json(h.amplitude);
            j["phase_histogram"] = histogram_json(h.phase);
        }
    } else {
        j["amplitude_pvalue"] = nullptr;
        j["phase_pvalue"] = nullptr;
    }
    return j;
}

std::vector<double> read_efficiencies(const std::string &path) {
    return path.empty() ? std::vector<double>{} : read_csv_vector(path);
}

GramMatrix gram_from_flags(int n, const std::optional<double> &overlap, const std::optional<double> &visibility,
                           const std::string &gram_path) {
    const int given = int(overlap.has_value()) + int(visibility.has_value()) + int(!gram_path.empty());
    if (given != 1) {
        throw std::invalid_argument("partial model needs exactly one of --overlap, --indistinguishability, --gram");
    }
    if (overlap) {
        return GramMatrix::uniform(static_cast<size_t>(n), *overlap);
    }
    if (visibility) {
        return GramMatrix::from_indistinguishability(static_cast<size_t>(n), *visibility);
    }
    const NumericTable t = read_csv_table(gram_path);
    CMatrix s(t.size(), t.size());
    for (size_t i = 0; i < t.size(); i++) {
        if (t[i].size() != t.size()) {
            throw std::invalid_argument("gram file must hold a square real matrix");
        }
        for (size_t j = 0; j < t.size(); j++) {
            s(i, j) = t[i][j];
        }
    }
    if (s.rows() != static_cast<size_t>(n)) {
        throw std::invalid_argument("gram matrix order does not match the photon number");
    }
    return GramMatrix(std::move(s));
}

void check_hash(const SampleHeader &h, const TransferMatrix &u) {
    const uint64_t f = fingerprint(u.elements);
    if (h.matrix_hash != 0 && h.matrix_hash != f) {
        throw std::invalid_argument("matrix hash mismatch: samples " + hash_hex(h.matrix_hash) + ", matrix " +
                                    hash_hex(f));
    }
}

struct Common {
    unsigned workers = 1;
};

// haar ------------------------------------------------------------------

struct HaarArgs {
    int modes = 0;
    uint64_t seed = 0;
    std::string output;
    std::string report;
    std::string measurements_out;
    double noise = 0.0;
    std::string noise_model = "additive";
    uint64_t noise_seed = 1;
    std::string eff;
};

int cmd_haar(const HaarArgs &a, std::ostream &out) {
    if (a.modes < 1) {
        throw std::invalid_argument("--modes must be positive");
    }
    const TransferMatrix u = haar_unitary(static_cast<size_t>(a.modes), a.seed);
    write_matrix(a.output, u);
    if (!a.measurements_out.empty()) {
        MeasurementSet meas = MeasurementSet::forward(u.elements, read_efficiencies(a.eff));
        if (a.noise > 0.0) {
            meas = perturb_amplitudes(meas, a.noise, parse_noise_model(a.noise_model), a.noise_seed);
        }
        write_measurements(a.measurements_out, meas);
    }
    Json j = matrix_report(u.elements, false);
    j["seed"] = a.seed;
    emit(a.report, dump(j), out);
    return kExitOk;
}

// compose ---------------------------------------------------------------

struct ComposeArgs {
    std::string circuit;
    std::string output;
    std::string report;
};

int cmd_compose(const ComposeArgs &a, std::ostream &out) {
    const CircuitDescription c = circuit_from_json(read_text_file(a.circuit));
    const TransferMatrix u = compose(c);
    write_matrix(a.output, u);
    Json j = matrix_report(u.elements, false);
    j["operations"] = c.ops.size();
    emit(a.report, dump(j), out);
    return kExitOk;
}

// reconstruct -----------------------------------------------------------

struct ReconstructArgs {
    std::string amplitudes;
    std::string phases;
    std::string eff;
    std::string normalization = "column";
    std::string gauge = "row0col0";
    std::string output;
    std::string report;
};

int cmd_reconstruct(const ReconstructArgs &a, std::ostream &out) {
    if (a.gauge != "row0col0") {
        throw std::invalid_argument("unsupported gauge '" + a.gauge + "' (only row0col0)");
    }
    const MeasurementSet meas = read_measurements(a.amplitudes, a.phases, a.eff);
    const Reconstruction r = reconstruct(meas, parse_normalization(a.normalization));
    write_matrix(a.output, r.matrix);
    Json j = matrix_report(r.matrix.elements, true);
    j["normalization"] = std::string(to_string(r.normalization));
    j["gauge"] = r.gauge;
    emit(a.report, dump(j), out);
    return kExitOk;
}

// sample ----------------------------------------------------------------

struct SampleArgs {
    std::string matrix;
    std::string input;
    uint64_t count = 0;
    std::string model = "boson";
    uint64_t seed = 0;
    int detect = -1;
    std::string eff;
    std::optional<double> overlap;
    std::optional<double> visibility;
    std::string gram;
    int modes = 0;
    int photons = 0;
    std::string space;
    std::string output;
    bool quiet = false;
};

int cmd_sample(const SampleArgs &a, const Common &c, std::ostream &out, std::ostream &err) {
    const Model model = parse_model(a.model);
    SampleHeader h;
    h.model = model;
    h.seed = a.seed;
    std::unique_ptr<Sampler> sampler;
    std::optional<TransferMatrix> u;
    if (!a.matrix.empty()) {
        u = read_matrix(a.matrix);
        h.matrix_hash = fingerprint(u->elements);
    }
    if (model == Model::uniform) {
        const int m = a.modes > 0 ? a.modes : (u ? static_cast<int>(u->modes()) : 0);
        if (m < 1 || a.photons < 1) {
            throw std::invalid_argument("uniform model needs --modes (or --matrix) and --photons");
        }
        if (u && static_cast<int>(u->modes()) != m) {
            throw std::invalid_argument("--modes does not match the matrix");
        }
        h.m = m;
        h.n = a.photons;
        h.space = a.space.empty() ? OutcomeSpace::collision_free : parse_space(a.space);
        sampler = std::make_unique<UniformSampler>(m, a.photons, h.space);
    } else {
        if (!u) {
            throw std::invalid_argument("model '" + a.model + "' needs --matrix");
        }
        if (a.input.empty()) {
            throw std::invalid_argument("model '" + a.model + "' needs --input");
        }
        require_unitary(*u);
        const int m = static_cast<int>(u->modes());
        const std::vector<int> labels = parse_mode_list(a.input);
        const InputConfig input = InputConfig::from_one_based(m, labels);
        h.m = m;
        h.n = input.photons();
        h.input = input.ports();
        h.space = a.space.empty() ? OutcomeSpace::full : parse_space(a.space);
        if (h.space != OutcomeSpace::full) {
            throw std::invalid_argument("--space collision-free applies to the uniform model only");
        }
        if (model != Model::lossy && a.detect >= 0 && a.detect != input.photons()) {
            throw std::invalid_argument("--detect needs --model lossy");
        }
        switch (model) {
            case Model::boson:
                if (input.photons() > kMaxSamplerPhotons) {
                    throw std::domain_error("boson sampling guard: n must not exceed " +
                                            std::to_string(kMaxSamplerPhotons));
                }
                sampler = std::make_unique<BosonSampler>(*u, input);
                break;
            case Model::distinguishable:
                sampler = std::make_unique<DistinguishableSampler>(*u, input);
                break;
            case Model::lossy: {
                if (a.detect < 1) {
                    throw std::invalid_argument("lossy model needs --detect");
                }
                LossSpec loss{input.photons(), a.detect};
                loss.validate();
                if (a.detect > kMaxSamplerPhotons) {
                    throw std::domain_error("lossy sampling guard: detected photons must not exceed " +
                                            std::to_string(kMaxSamplerPhotons));
                }
                const std::vector<double> eff = read_efficiencies(a.eff);
                sampler = std::make_unique<LossySampler>(*u, input, loss, eff);
                h.n = a.detect;
                break;
            }
            case Model::partial: {
                if (input.photons() > kMaxPartialPhotons) {
                    throw std::domain_error("partial model guard: n must not exceed " +
                                            std::to_string(kMaxPartialPhotons));
                }
                const GramMatrix s = gram_from_flags(input.photons(), a.overlap, a.visibility, a.gram);
                sampler = std::make_unique<PmfSampler>(distribution_partial(*u, input, s), Model::partial);
                break;
            }
            case Model::uniform:
                break;
        }
    }
    if (a.count < 1) {
        throw std::invalid_argument("--n must be positive");
    }

    std::ofstream file;
    std::ostream *dst = &out;
    if (!a.output.empty() && a.output != "-") {
        file.open(a.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::invalid_argument("cannot open '" + a.output + "' for writing");
        }
        dst = &file;
    }
    *dst << sample_header_line(h, a.count) << '\n';
    const size_t n = static_cast<size_t>(h.n);
    std::vector<int> buf;
    for (uint64_t first = 0; first < a.count; first += kChunk) {
        const uint64_t len = std::min(kChunk, a.count - first);
        buf.assign(len * n, 0);
        generate_draws(*sampler, a.seed, first, len, buf, c.workers);
        for (uint64_t i = 0; i < len; i++) {
            *dst << sample_draw_line(first + i, std::span<const int>(buf).subspan(i * n, n)) << '\n';
        }
        if (!a.quiet) {
            err << "sample: " << first + len << "/" << a.count << '\n';
        }
    }
    dst->flush();
    if (!*dst) {
        throw std::runtime_error("write failed");
    }
    return kExitOk;
}

// metrics ---------------------------------------------------------------

struct MetricsArgs {
    std::string samples;
    std::string matrix;
    std::string against;
    std::string eff;
    std::optional<double> overlap;
    std::optional<double> visibility;
    std::string gram;
    std::string output;
    std::string pmf_out;
};

Json space_json(int m, int n) {
    const BigCount full = state_space_size(m, n, OutcomeSpace::full);
    const BigCount cf = n <= m ? state_space_size(m, n, OutcomeSpace::collision_free) : BigCount(0);
    const BigCount hil = hilbert_dimension(m, n);
    Json j;
    j["m"] = m;
    j["n"] = n;
    j["space_full"] = to_decimal(full);
    j["space_collision_free"] = to_decimal(cf);
    j["hilbert_dimension"] = to_decimal(hil);
    j["log2_space_full"] = log2_big(full);
    j["log2_hilbert_dimension"] = log2_big(hil);
    return j;
}

int cmd_metrics(const MetricsArgs &a, std::ostream &out) {
    const SampleSet s = read_samples(std::filesystem::path(a.samples));
    const SampleHeader &h = s.header();
    const Model against = a.against.empty() ? h.model : parse_model(a.against);
    std::optional<TransferMatrix> u;
    if (!a.matrix.empty()) {
        u = read_matrix(a.matrix);
        check_hash(h, *u);
        if (static_cast<int>(u->modes()) != h.m) {
            throw std::invalid_argument("sample mode count does not match the matrix");
        }
    }
    Pmf truth;
    if (against == Model::uniform) {
        truth = uniform_distribution(h.m, h.n, h.space);
    } else {
        if (!u) {
            throw std::invalid_argument("comparison against '" + std::string(to_string(against)) + "' needs --matrix");
        }
        if (h.input.empty()) {
            throw std::invalid_argument("sample file records no input ports");
        }
        const InputConfig input(h.m, h.input);
        const bool lossy = static_cast<size_t>(h.n) < h.input.size();
        if (lossy && against != Model::lossy) {
            throw std::invalid_argument("samples detect fewer photons than sent; compare against 'lossy'");
        }
        switch (against) {
            case Model::boson:
                truth = exact_distribution(*u, input);
                break;
            case Model::distinguishable:
                truth = exact_distribution_distinguishable(*u, input);
                break;
            case Model::lossy: {
                const std::vector<double> eff = read_efficiencies(a.eff);
                truth = exact_distribution_lossy(*u, input, LossSpec{input.photons(), h.n}, eff);
                break;
            }
            case Model::partial:
                truth = distribution_partial(*u, input, gram_from_flags(input.photons(), a.overlap, a.visibility,
                                                                         a.gram));
                break;
            case Model::uniform:
                break;
        }
    }
    const ScoreReport r = score(truth, s, h.space);
    Json j;
    j["version"] = std::string(kVersion);
    j["matrix_hash"] = hash_hex(u ? fingerprint(u->elements) : h.matrix_hash);
    j["model"] = std::string(to_string(h.model));
    j["against"] = std::string(to_string(against));
    j["F"] = r.fidelity;
    j["D"] = r.distance;
    j["draws"] = r.draws;
    j["support"] = r.support;
    j["space"] = std::string(to_string(h.space));
    j["space_size"] = to_decimal(r.space_size);
    const Json sizes = space_json(h.m, h.n);
    for (auto &[k, v] : sizes.items()) {
        if (k != "m" && k != "n") {
            j[k] = v;
        }
    }
    j["bias_warning"] = r.bias_warning;
    emit(a.output, dump(j), out);
    if (!a.pmf_out.empty()) {
        write_text_file(a.pmf_out, provenance_line(u ? fingerprint(u->elements) : h.matrix_hash) + pmf_to_csv(truth));
    }
    return kExitOk;
}

// validate --------------------------------------------------------------

struct ValidateArgs {
    std::string method;
    std::string samples;
    std::string matrix;
    std::string output;
    std::string meta;
    std::string raw;
    bool paired_uniform = false;
    bool paired_distinguishable = false;
    std::optional<uint64_t> paired_seed;
};

int cmd_validate(const ValidateArgs &a, const Common &c, std::ostream &out) {
    const SampleSet s = read_samples(std::filesystem::path(a.samples));
    const SampleHeader &h = s.header();
    const TransferMatrix u = read_matrix(a.matrix);
    check_hash(h, u);
    if (h.input.empty()) {
        throw std::invalid_argument("sample file records no input ports; validation needs them");
    }
    if (a.paired_uniform && a.paired_distinguishable) {
        throw std::invalid_argument("choose at most one paired run");
    }
    const bool bayes = a.method == "bayes";
    const uint64_t hash = fingerprint(u.elements);
    auto run_trace = [&](const SampleSet &draws) {
        return bayes ? bayes_trace(u.elements, h.input, draws, c.workers) : rne_trace(u.elements, h.input, draws);
    };
    const ValidationTrace trace = run_trace(s);

    std::optional<ValidationTrace> paired;
    std::string paired_name;
    if (a.paired_uniform || a.paired_distinguishable) {
        const uint64_t seed = a.paired_seed.value_or(h.seed + 1);
        SampleSet alt;
        if (a.paired_uniform) {
            alt = sample_uniform(h.m, h.n, s.size(), seed, OutcomeSpace::collision_free, c.workers);
            paired_name = "uniform";
        } else {
            if (static_cast<size_t>(h.n) != h.input.size()) {
                throw std::invalid_argument("paired distinguishable run needs a lossless sample set");
            }
            alt = sample_distinguishable(u, InputConfig(h.m, h.input), s.size(), seed, c.workers);
            paired_name = "distinguishable";
        }
        SampleHeader ah = alt.header();
        ah.input = h.input;
        SampleSet relabeled(ah);
        relabeled.storage() = alt.storage();
        paired = run_trace(relabeled);
    }
    emit(a.output, provenance_line(hash) + trace_to_csv(trace, paired ? &*paired : nullptr), out);
    if (!a.raw.empty()) {
        write_text_file(a.raw, provenance_line(hash) + trace_raw_to_csv(trace));
    }
    if (!a.meta.empty()) {
        TraceMetadata meta;
        meta.kind = trace.kind;
        meta.hypothesis = bayes ? "indistinguishable" : "boson";
        meta.alternative = bayes ? "distinguishable" : "uniform";
        meta.matrix_hash = hash;
        meta.draws = trace.size();
        meta.paired = paired_name;
        write_text_file(a.meta, trace_metadata_json(meta));
    }
    return kExitOk;
}

// rates -----------------------------------------------------------------

struct RatesArgs {
    double pulse_rate = 76e6;
    double eta = 0.0;
    int sent = 0;
    int detect = -1;
    std::string fit;
    int table = 0;
    std::string output;
};

std::pair<int, double> parse_point(std::string_view text) {
    const size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("--fit points look like n:rate");
    }
    const int n = to_int(text.substr(0, colon));
    const double rate = std::stod(std::string(text.substr(colon + 1)));
    return {n, rate};
}

int cmd_rates(const RatesArgs &a, std::ostream &out) {
    Json j;
    j["version"] = std::string(kVersion);
    if (!a.fit.empty()) {
        const size_t comma = a.fit.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("--fit needs two points, e.g. 5:295,10:0.01");
        }
        const auto [n1, r1] = parse_point(std::string_view(a.fit).substr(0, comma));
        const auto [n2, r2] = parse_point(std::string_view(a.fit).substr(comma + 1));
        const RateFit f = fit_rate_model(n1, r1, n2, r2);
        j["fit_pulse_rate"] = f.pulse_rate;
        j["fit_eta"] = f.eta;
        j["pulse_rate"] = a.pulse_rate;
        j["eta_point_1"] = eta_from_point(r1, a.pulse_rate, n1);
        j["eta_point_2"] = eta_from_point(r2, a.pulse_rate, n2);
        emit(a.output, dump(j), out);
        return kExitOk;
    }
    if (!(a.eta > 0.0 && a.eta < 1.0)) {
        throw std::invalid_argument("--eta must lie in (0, 1)");
    }
    if (a.table > 0) {
        std::string csv = provenance_line(0) + "n,standard_rate,one_loss_rate,enhancement\n";
        for (int n = 1; n <= a.table; n++) {
            const double std_rate = expected_rate(a.pulse_rate, n, n, a.eta);
            const double lossy = expected_rate(a.pulse_rate, n + 1, n, a.eta);
            csv += std::to_string(n) + "," + format_double(std_rate) + "," + format_double(lossy) + "," +
                   format_double(lossy / std_rate) + "\n";
        }
        emit(a.output, csv, out);
        return kExitOk;
    }
    if (a.sent < 1) {
        throw std::invalid_argument("--sent must be positive");
    }
    const int detect = a.detect < 0 ? a.sent : a.detect;
    j["pulse_rate"] = a.pulse_rate;
    j["eta"] = a.eta;
    j["sent"] = a.sent;
    j["detect"] = detect;
    j["rate"] = expected_rate(a.pulse_rate, a.sent, detect, a.eta);
    emit(a.output, dump(j), out);
    return kExitOk;
}

// space -----------------------------------------------------------------

int cmd_space(int m, int n, const std::string &output, std::ostream &out) {
    Json j;
    j["version"] = std::string(kVersion);
    const Json sizes = space_json(m, n);
    for (auto &[k, v] : sizes.items()) {
        j[k] = v;
    }
    emit(output, dump(j), out);
    return kExitOk;
}

}  // namespace

std::vector<int> parse_mode_list(std::string_view text) {
    std::vector<int> labels;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        const std::string_view item = text.substr(pos, comma - pos);
        if (item.empty()) {
            throw std::invalid_argument("empty entry in mode list '" + std::string(text) + "'");
        }
        size_t sep = item.find("..");
        size_t width = 2;
        if (sep == std::string_view::npos) {
            sep = item.find('-');
            width = 1;
        }
        if (sep == std::string_view::npos) {
            labels.push_back(to_int(item));
        } else {
            const int lo = to_int(item.substr(0, sep));
            const int hi = to_int(item.substr(sep + width));
            if (hi < lo) {
                throw std::invalid_argument("descending range '" + std::string(item) + "'");
            }
            for (int k = lo; k <= hi; k++) {
                labels.push_back(k);
            }
        }
        pos = comma + 1;
    }
    return labels;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"bosim: boson-sampling simulation and validation toolkit", "bosim"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));
    Common common;
    std::optional<unsigned> workers;
    app.add_option("--workers", workers, "Worker threads (default: $BOSIM_WORKERS or 1)")->check(CLI::PositiveNumber);

    HaarArgs haar;
    auto *h = app.add_subcommand("haar", "Draw a Haar-random unitary");
    h->add_option("--modes", haar.modes, "Mode count m")->required();
    h->add_option("--seed", haar.seed, "Seed")->required();
    h->add_option("-o,--output", haar.output, "Matrix JSON path")->required();
    h->add_option("--report", haar.report, "Report JSON path (default stdout)");
    h->add_option("--measurements-out", haar.measurements_out, "Also write synthetic measurement CSVs here");
    h->add_option("--noise", haar.noise, "Amplitude noise level sigma");
    h->add_option("--noise-model", haar.noise_model, "additive|multiplicative");
    h->add_option("--noise-seed", haar.noise_seed, "Noise seed");
    h->add_option("--eff", haar.eff, "Detector efficiencies CSV");

    ComposeArgs comp;
    auto *cp = app.add_subcommand("compose", "Compose a beam-splitter/phase circuit");
    cp->add_option("--circuit", comp.circuit, "Circuit JSON")->required();
    cp->add_option("-o,--output", comp.output, "Matrix JSON path")->required();
    cp->add_option("--report", comp.report, "Report JSON path (default stdout)");

    ReconstructArgs rec;
    auto *r = app.add_subcommand("reconstruct", "Reconstruct a transfer matrix from measurements");
    r->add_option("--amplitudes", rec.amplitudes, "Amplitude CSV")->required();
    r->add_option("--phases", rec.phases, "Phase CSV")->required();
    r->add_option("--eff", rec.eff, "Efficiencies CSV");
    r->add_option("--normalization", rec.normalization, "column|global");
    r->add_option("--gauge", rec.gauge, "Phase gauge (row0col0)");
    r->add_option("-o,--output", rec.output, "Matrix JSON path")->required();
    r->add_option("--report", rec.report, "Report JSON path (default stdout)");

    SampleArgs smp;
    auto *s = app.add_subcommand("sample", "Draw samples to a JSONL file");
    s->add_option("--matrix", smp.matrix, "Matrix JSON");
    s->add_option("--input", smp.input, "1-based input modes, e.g. 1,2 or 1..20");
    s->add_option("--n,--count", smp.count, "Number of draws")->required();
    s->add_option("--model", smp.model, "boson|distinguishable|uniform|lossy|partial");
    s->add_option("--seed", smp.seed, "Master seed")->required();
    s->add_option("--detect", smp.detect, "Detected photons (lossy)");
    s->add_option("--eff", smp.eff, "Input survival efficiencies CSV (lossy)");
    s->add_option("--overlap", smp.overlap, "Pairwise Gram overlap (partial)");
    s->add_option("--indistinguishability", smp.visibility, "Pairwise indistinguishability |overlap|^2 (partial)");
    s->add_option("--gram", smp.gram, "Gram matrix CSV (partial)");
    s->add_option("--modes", smp.modes, "Mode count (uniform)");
    s->add_option("--photons", smp.photons, "Photon count (uniform)");
    s->add_option("--space", smp.space, "full|collision-free");
    s->add_option("-o,--output", smp.output, "Output JSONL path (default stdout)");
    s->add_flag("--quiet", smp.quiet, "No progress on stderr");

    MetricsArgs met;
    auto *mt = app.add_subcommand("metrics", "Fidelity and distance of samples against a model");
    mt->add_option("--samples", met.samples, "Sample JSONL")->required();
    mt->add_option("--matrix", met.matrix, "Matrix JSON");
    mt->add_option("--against", met.against, "Reference model (default: the sampled one)");
    mt->add_option("--eff", met.eff, "Input survival efficiencies CSV (lossy)");
    mt->add_option("--overlap", met.overlap, "Pairwise Gram overlap (partial)");
    mt->add_option("--indistinguishability", met.visibility, "Pairwise indistinguishability (partial)");
    mt->add_option("--gram", met.gram, "Gram matrix CSV (partial)");
    mt->add_option("-o,--output", met.output, "Report JSON path (default stdout)");
    mt->add_option("--pmf-out", met.pmf_out, "Write the reference distribution as CSV");

    ValidateArgs val;
    auto *v = app.add_subcommand("validate", "Bayesian or row-norm validation trace");
    v->add_option("method", val.method, "bayes|rne")->required()->check(CLI::IsMember({"bayes", "rne"}));
    v->add_option("--samples", val.samples, "Sample JSONL")->required();
    v->add_option("--matrix", val.matrix, "Matrix JSON")->required();
    v->add_option("-o,--output", val.output, "Trace CSV path (default stdout)");
    v->add_option("--meta", val.meta, "Metadata JSON path");
    v->add_option("--raw", val.raw, "Raw per-draw values CSV path");
    v->add_flag("--paired-uniform", val.paired_uniform, "Add a simulated uniform run");
    v->add_flag("--paired-distinguishable", val.paired_distinguishable, "Add a simulated distinguishable run");
    v->add_option("--paired-seed", val.paired_seed, "Seed of the paired run (default: sample seed + 1)");

    RatesArgs rat;
    auto *rt = app.add_subcommand("rates", "Sampling-rate model");
    rt->add_option("--pulse-rate", rat.pulse_rate, "Pulse repetition rate in Hz");
    rt->add_option("--eta", rat.eta, "Per-photon efficiency");
    rt->add_option("--sent", rat.sent, "Photons sent");
    rt->add_option("--detect", rat.detect, "Photons detected (default: all)");
    rt->add_option("--fit", rat.fit, "Fit through two points n1:rate1,n2:rate2");
    rt->add_option("--table", rat.table, "Table of rates for n = 1..N");
    rt->add_option("-o,--output", rat.output, "Output path (default stdout)");

    int sp_m = 0, sp_n = 0;
    std::string sp_out;
    auto *sc = app.add_subcommand("space", "State-space and Hilbert-space sizes");
    sc->add_option("--modes", sp_m, "Mode count m")->required();
    sc->add_option("--photons", sp_n, "Photon count n")->required();
    sc->add_option("-o,--output", sp_out, "Output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << '\n';
        return kExitError;
    }
    try {
        common.workers = workers.value_or(default_workers());
        if (*h) return cmd_haar(haar, out);
        if (*cp) return cmd_compose(comp, out);
        if (*r) return cmd_reconstruct(rec, out);
        if (*s) return cmd_sample(smp, common, out, err);
        if (*mt) return cmd_metrics(met, out);
        if (*v) return cmd_validate(val, common, out);
        if (*rt) return cmd_rates(rat, out);
        if (*sc) return cmd_space(sp_m, sp_n, sp_out, out);
    } catch (const std::exception &e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace bosim::cli
