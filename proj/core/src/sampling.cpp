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

#include "bosim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "bosim/permanent.hpp"
#include "bosim/scattering.hpp"

namespace bosim {

namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t binomial_saturating(uint64_t a, uint64_t b) {
    if (b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    unsigned __int128 result = 1;
    for (uint64_t k = 1; k <= b; k++) {
        result = result * (a - b + k) / k;
        if (result >= kSaturated) {
            return kSaturated;
        }
    }
    return static_cast<uint64_t>(result);
}

uint64_t space_size(int m, int n, OutcomeSpace space) {
    return space == OutcomeSpace::full ? binomial_saturating(static_cast<uint64_t>(m + n - 1), static_cast<uint64_t>(n))
                                       : binomial_saturating(static_cast<uint64_t>(m), static_cast<uint64_t>(n));
}

/// Walks every outcome of the given space in colex order.
template <typename Fn>
Pmf enumerate_space(int m, int n, OutcomeSpace space, Fn &&prob) {
    require_enumerable(m, n, space);
    Pmf pmf(m, n);
    std::vector<int> modes(static_cast<size_t>(n));
    if (space == OutcomeSpace::full) {
        std::fill(modes.begin(), modes.end(), 0);
        do {
            pmf.push_back(modes, prob(std::span<const int>(modes)));
        } while (next_multiset_colex(modes, m));
    } else {
        std::iota(modes.begin(), modes.end(), 0);
        do {
            pmf.push_back(modes, prob(std::span<const int>(modes)));
        } while (next_combination_colex(modes, m));
    }
    return pmf;
}

void check_input_matches(const TransferMatrix &u, const InputConfig &input) {
    u.validate();
    if (input.modes() != static_cast<int>(u.modes())) {
        throw std::invalid_argument("input config mode count " + std::to_string(input.modes()) +
                                    " differs from matrix size " + std::to_string(u.modes()));
    }
}

void check_output_matches(const TransferMatrix &u, const InputConfig &input, const OutputState &out) {
    check_input_matches(u, input);
    if (out.modes() != input.modes()) {
        throw std::invalid_argument("output state mode count differs from matrix size");
    }
    if (out.photons() != input.photons()) {
        throw std::invalid_argument("photon-number mismatch: input carries " + std::to_string(input.photons()) +
                                    ", output holds " + std::to_string(out.photons()));
    }
}

/// Rounding can push a vanishing probability a hair below zero.
double clamp_rounding(double p) {
    if (p < 0.0 && p > -1e-12) {
        return 0.0;
    }
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gram matrices and loss specs

bool is_positive_semidefinite(const CMatrix &h, double tol) {
    const size_t n = h.rows();
    CMatrix l(n, n);
    for (size_t j = 0; j < n; j++) {
        double pivot = h(j, j).real();
        for (size_t k = 0; k < j; k++) {
            pivot -= std::norm(l(j, k));
        }
        if (pivot < -tol) {
            return false;
        }
        if (pivot <= tol) {
            // Rank-deficient direction: the rest of the column must vanish too.
            for (size_t i = j + 1; i < n; i++) {
                cplx residual = h(i, j);
                for (size_t k = 0; k < j; k++) {
                    residual -= l(i, k) * std::conj(l(j, k));
                }
                if (std::abs(residual) > 1e-6) {
                    return false;
                }
            }
            continue;
        }
        const double d = std::sqrt(pivot);
        l(j, j) = d;
        for (size_t i = j + 1; i < n; i++) {
            cplx residual = h(i, j);
            for (size_t k = 0; k < j; k++) {
                residual -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = residual / d;
        }
    }
    return true;
}

GramMatrix::GramMatrix(CMatrix overlaps) : s_(std::move(overlaps)) {
    if (!s_.is_square() || s_.rows() == 0) {
        throw std::invalid_argument("gram matrix must be square and non-empty");
    }
    if (!s_.all_finite()) {
        throw std::invalid_argument("gram matrix has non-finite entries");
    }
    const size_t n = s_.rows();
    for (size_t i = 0; i < n; i++) {
        if (std::abs(s_(i, i) - 1.0) > 1e-12) {
            throw std::invalid_argument("gram matrix diagonal must be 1");
        }
        for (size_t j = 0; j < i; j++) {
            if (std::abs(s_(i, j) - std::conj(s_(j, i))) > 1e-12) {
                throw std::invalid_argument("gram matrix must be Hermitian");
            }
        }
    }
    if (!is_positive_semidefinite(s_)) {
        throw std::invalid_argument("gram matrix is not positive semidefinite");
    }
}

GramMatrix GramMatrix::uniform(size_t n, double x) {
    CMatrix s(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            s(i, j) = (i == j) ? 1.0 : x;
        }
    }
    return GramMatrix(std::move(s));
}

GramMatrix GramMatrix::from_indistinguishability(size_t n, double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("indistinguishability must lie in [0, 1]");
    }
    return uniform(n, std::sqrt(v));
}

void LossSpec::validate() const {
    if (n_sent < 1 || n_detect < 1) {
        throw std::invalid_argument("loss spec: photon counts must be positive");
    }
    if (n_detect >= n_sent) {
        throw std::invalid_argument("loss spec: detected photons must be fewer than sent photons");
    }
}

void require_unitary(const TransferMatrix &u) {
    u.validate();
    if (u.unitary) {
        return;
    }
    const UnitarityReport r = unitarity_report(u.elements);
    if (r.max_offdiagonal > kUnitarityTolerance || r.max_diagonal_deviation > kUnitarityTolerance) {
        throw std::invalid_argument("matrix is not unitary (mean off-diagonal deviation " +
                                    std::to_string(r.mean_offdiagonal) + ")");
    }
}

void require_enumerable(int m, int n, OutcomeSpace space) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("outcome space needs m >= 1 and n >= 1");
    }
    const uint64_t size = space_size(m, n, space);
    if (size > kMaxExactStates) {
        throw std::domain_error("outcome space of " + (size == kSaturated ? std::string(">2^64") : std::to_string(size)) +
                                " states exceeds the exact-enumeration guard of " +
                                std::to_string(kMaxExactStates) + "; use a sampler instead");
    }
}

// ---------------------------------------------------------------------------
// Probabilities

double prob_output(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes) {
    const CMatrix m = scattering_submatrix(u, ports, out_modes);
    return std::norm(perm_ryser(m)) / occupation_factorial(out_modes);
}

double prob_output(const TransferMatrix &u, const InputConfig &input, const OutputState &out) {
    check_output_matches(u, input, out);
    return prob_output(u.elements, input.ports(), out.mode_list());
}

double prob_output_distinguishable(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes) {
    const CMatrix m = scattering_submatrix(u, ports, out_modes).abs_squared();
    return perm_ryser(m).real() / occupation_factorial(out_modes);
}

double prob_output_distinguishable(const TransferMatrix &u, const InputConfig &input, const OutputState &out) {
    check_output_matches(u, input, out);
    return prob_output_distinguishable(u.elements, input.ports(), out.mode_list());
}

double prob_output_partial(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes,
                           const GramMatrix &gram) {
    const size_t n = ports.size();
    if (gram.photons() != n) {
        throw std::invalid_argument("gram matrix size differs from photon number");
    }
    if (n > static_cast<size_t>(kMaxPartialPhotons)) {
        throw std::domain_error("partial-distinguishability model limited to n <= " +
                                std::to_string(kMaxPartialPhotons));
    }
    const CMatrix m = scattering_submatrix(u, ports, out_modes);
    const CMatrix &s = gram.overlaps();
    // For fixed sigma the tau-sum is the permanent of
    // W[k][j] = S[j][sigma(k)] M[k][sigma(k)] conj(M[k][j]).
    std::vector<size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    CMatrix w(n, n);
    cplx total = 0.0;
    do {
        for (size_t k = 0; k < n; k++) {
            const cplx a = m(k, sigma[k]);
            for (size_t j = 0; j < n; j++) {
                w(k, j) = s(j, sigma[k]) * a * std::conj(m(k, j));
            }
        }
        total += perm_ryser(w);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    if (std::abs(total.imag()) >= 1e-10) {
        throw std::runtime_error("partial-distinguishability probability has imaginary residue " +
                                 std::to_string(total.imag()));
    }
    return total.real() / occupation_factorial(out_modes);
}

// ---------------------------------------------------------------------------
// Exact distributions

Pmf exact_distribution(const TransferMatrix &u, const InputConfig &input) {
    check_input_matches(u, input);
    require_unitary(u);
    const auto &ports = input.ports();
    Pmf pmf = enumerate_space(input.modes(), input.photons(), OutcomeSpace::full,
                              [&](std::span<const int> out) { return prob_output(u.elements, ports, out); });
    pmf.normalize();
    return pmf;
}

Pmf exact_distribution_distinguishable(const TransferMatrix &u, const InputConfig &input) {
    check_input_matches(u, input);
    require_unitary(u);
    const auto &ports = input.ports();
    Pmf pmf = enumerate_space(input.modes(), input.photons(), OutcomeSpace::full, [&](std::span<const int> out) {
        return clamp_rounding(prob_output_distinguishable(u.elements, ports, out));
    });
    pmf.normalize();
    return pmf;
}

Pmf distribution_partial(const TransferMatrix &u, const InputConfig &input, const GramMatrix &s) {
    check_input_matches(u, input);
    require_unitary(u);
    if (input.photons() > kMaxPartialPhotons) {
        throw std::domain_error("partial-distinguishability model limited to n <= " +
                                std::to_string(kMaxPartialPhotons));
    }
    if (s.photons() != static_cast<size_t>(input.photons())) {
        throw std::invalid_argument("gram matrix size differs from photon number");
    }
    const auto &ports = input.ports();
    Pmf pmf = enumerate_space(input.modes(), input.photons(), OutcomeSpace::full, [&](std::span<const int> out) {
        return clamp_rounding(prob_output_partial(u.elements, ports, out, s));
    });
    pmf.normalize();
    return pmf;
}

Pmf exact_distribution_lossy(const TransferMatrix &u, const InputConfig &input, const LossSpec &loss,
                             std::span<const double> efficiencies) {
    check_input_matches(u, input);
    require_unitary(u);
    loss.validate();
    if (loss.n_sent != input.photons()) {
        throw std::invalid_argument("loss spec n_sent differs from the number of input ports");
    }
    require_enumerable(input.modes(), loss.n_detect, OutcomeSpace::full);
    const SurvivorSubsets subsets(loss.n_sent, loss.n_detect, efficiencies);
    const auto &sent = input.ports();
    std::vector<double> mixture;
    Pmf shape;
    for (const auto &[subset, weight] : subsets.enumerate()) {
        std::vector<int> ports;
        for (int idx : subset) {
            ports.push_back(sent[static_cast<size_t>(idx)]);
        }
        Pmf part = exact_distribution(u, InputConfig(input.modes(), ports));
        if (mixture.empty()) {
            mixture.assign(part.size(), 0.0);
            shape = part;
        }
        for (size_t k = 0; k < part.size(); k++) {
            mixture[k] += weight * part.probability(k);
        }
    }
    Pmf pmf(input.modes(), loss.n_detect);
    for (size_t k = 0; k < shape.size(); k++) {
        pmf.push_back(shape.outcome(k), mixture[k]);
    }
    pmf.normalize();
    return pmf;
}

Pmf uniform_distribution(int m, int n, OutcomeSpace space) {
    const double p = 1.0 / static_cast<double>(space_size(m, n, space));
    Pmf pmf = enumerate_space(m, n, space, [p](std::span<const int>) { return p; });
    pmf.normalize();
    return pmf;
}

// ---------------------------------------------------------------------------
// Survivor subsets

SurvivorSubsets::SurvivorSubsets(int n_sent, int n_detect, std::span<const double> efficiencies)
    : n_sent_(n_sent), n_detect_(n_detect), odds_(static_cast<size_t>(n_sent), 1.0) {
    if (n_detect < 0 || n_detect > n_sent) {
        throw std::invalid_argument("survivor subsets: need 0 <= n_detect <= n_sent");
    }
    if (!efficiencies.empty()) {
        if (efficiencies.size() != static_cast<size_t>(n_sent)) {
            throw std::invalid_argument("survivor subsets: one efficiency per sent photon is required");
        }
        for (size_t j = 0; j < efficiencies.size(); j++) {
            const double eta = efficiencies[j];
            if (!(eta > 0.0 && eta < 1.0)) {
                throw std::invalid_argument("survivor subsets: efficiencies must lie in (0, 1)");
            }
            odds_[j] = eta / (1.0 - eta);
        }
    }
    const size_t ns = static_cast<size_t>(n_sent);
    const size_t nd = static_cast<size_t>(n_detect);
    suffix_.assign(ns + 1, std::vector<double>(nd + 1, 0.0));
    suffix_[ns][0] = 1.0;
    for (size_t j = ns; j-- > 0;) {
        suffix_[j][0] = 1.0;
        for (size_t r = 1; r <= nd; r++) {
            suffix_[j][r] = suffix_[j + 1][r] + odds_[j] * suffix_[j + 1][r - 1];
        }
    }
}

void SurvivorSubsets::draw(SplitMix64 &rng, std::vector<int> &out) const {
    out.clear();
    size_t need = static_cast<size_t>(n_detect_);
    for (size_t j = 0; j < static_cast<size_t>(n_sent_) && need > 0; j++) {
        const double p = odds_[j] * suffix_[j + 1][need - 1] / suffix_[j][need];
        if (rng.uniform01() < p) {
            out.push_back(static_cast<int>(j));
            need--;
        }
    }
}

double SurvivorSubsets::probability(std::span<const int> subset) const {
    if (subset.size() != static_cast<size_t>(n_detect_)) {
        return 0.0;
    }
    double w = 1.0;
    for (int j : subset) {
        w *= odds_[static_cast<size_t>(j)];
    }
    return w / suffix_[0][static_cast<size_t>(n_detect_)];
}

std::vector<std::pair<std::vector<int>, double>> SurvivorSubsets::enumerate() const {
    std::vector<std::pair<std::vector<int>, double>> all;
    std::vector<int> subset(static_cast<size_t>(n_detect_));
    std::iota(subset.begin(), subset.end(), 0);
    do {
        all.emplace_back(subset, probability(subset));
    } while (next_combination_colex(subset, n_sent_));
    return all;
}

// ---------------------------------------------------------------------------
// Samplers

BosonSampler::BosonSampler(const TransferMatrix &u, const InputConfig &input)
    : u_(u.elements), ports_(input.ports()) {
    check_input_matches(u, input);
    require_unitary(u);
    if (input.photons() > kMaxSamplerPhotons) {
        throw std::domain_error("boson sampler limited to n <= " + std::to_string(kMaxSamplerPhotons) +
                                " photons per draw");
    }
}

void BosonSampler::draw(SplitMix64 &rng, std::vector<int> &out) const { draw_ports(rng, ports_, out); }

void BosonSampler::draw_ports(SplitMix64 &rng, std::span<const int> ports, std::vector<int> &out) const {
    const size_t n = ports.size();
    const size_t m = u_.rows();
    std::vector<int> cols(ports.begin(), ports.end());
    for (size_t k = n; k > 1; k--) {
        const size_t j = static_cast<size_t>(rng.below(k));
        std::swap(cols[k - 1], cols[j]);
    }
    out.clear();
    std::vector<double> cdf(m);
    for (size_t step = 1; step <= n; step++) {
        // Rows chosen so far against the first `step` permuted columns.
        CMatrix b(step - 1, step);
        for (size_t i = 0; i + 1 < step; i++) {
            for (size_t l = 0; l < step; l++) {
                b(i, l) = u_(static_cast<size_t>(out[i]), static_cast<size_t>(cols[l]));
            }
        }
        const std::vector<cplx> minors = column_minor_permanents(b);
        double acc = 0.0;
        for (size_t x = 0; x < m; x++) {
            cplx amp = 0.0;
            for (size_t l = 0; l < step; l++) {
                amp += u_(x, static_cast<size_t>(cols[l])) * minors[l];
            }
            acc += std::norm(amp);
            cdf[x] = acc;
        }
        if (!(acc > 0.0)) {
            throw std::runtime_error("boson sampler: vanishing marginal; matrix is not unitary");
        }
        const double target = rng.uniform01() * acc;
        size_t pick = static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), target) - cdf.begin());
        pick = std::min(pick, m - 1);
        out.push_back(static_cast<int>(pick));
    }
    std::sort(out.begin(), out.end());
}

DistinguishableSampler::DistinguishableSampler(const TransferMatrix &u, const InputConfig &input)
    : m_(static_cast<int>(u.modes())) {
    check_input_matches(u, input);
    require_unitary(u);
    for (int c : input.ports()) {
        std::vector<double> cdf(u.modes());
        double acc = 0.0;
        for (size_t i = 0; i < u.modes(); i++) {
            acc += std::norm(u(i, static_cast<size_t>(c)));
            cdf[i] = acc;
        }
        cdfs_.push_back(std::move(cdf));
    }
}

void DistinguishableSampler::draw(SplitMix64 &rng, std::vector<int> &out) const {
    out.clear();
    for (const auto &cdf : cdfs_) {
        const double target = rng.uniform01() * cdf.back();
        size_t pick = static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), target) - cdf.begin());
        out.push_back(static_cast<int>(std::min(pick, cdf.size() - 1)));
    }
    std::sort(out.begin(), out.end());
}

UniformSampler::UniformSampler(int m, int n, OutcomeSpace space) : m_(m), n_(n), space_(space) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("uniform sampler: need m >= 1 and n >= 1");
    }
    if (space == OutcomeSpace::collision_free && n > m) {
        throw std::invalid_argument("uniform sampler: collision-free space needs n <= m");
    }
    size_ = bosim::space_size(m, n, space);
    if (size_ == kSaturated) {
        throw std::invalid_argument("uniform sampler: outcome space not representable in 64 bits");
    }
    const size_t top = static_cast<size_t>(m + n);
    binom_.assign(top + 1, std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
    for (size_t a = 0; a <= top; a++) {
        for (size_t b = 0; b <= static_cast<size_t>(n); b++) {
            binom_[a][b] = binomial_saturating(a, b);
        }
    }
}

void UniformSampler::unrank(uint64_t rank, std::vector<int> &out) const {
    // Combinatorial number system: rank = sum_i C(c_i, i + 1), c strictly ascending.
    const int universe = space_ == OutcomeSpace::full ? m_ + n_ - 1 : m_;
    out.assign(static_cast<size_t>(n_), 0);
    int c = universe - 1;
    for (int i = n_ - 1; i >= 0; i--) {
        const size_t k = static_cast<size_t>(i) + 1;
        while (binom_[static_cast<size_t>(c)][k] > rank) {
            c--;
        }
        out[static_cast<size_t>(i)] = c;
        rank -= binom_[static_cast<size_t>(c)][k];
        c--;
    }
    if (space_ == OutcomeSpace::full) {
        for (int i = 0; i < n_; i++) {
            out[static_cast<size_t>(i)] -= i;
        }
    }
}

void UniformSampler::draw(SplitMix64 &rng, std::vector<int> &out) const { unrank(rng.below(size_), out); }

LossySampler::LossySampler(const TransferMatrix &u, const InputConfig &input, const LossSpec &loss,
                           std::span<const double> efficiencies)
    : sent_(input.ports()), subsets_(loss.n_sent, loss.n_detect, efficiencies), boson_(u, input) {
    loss.validate();
    if (loss.n_sent != input.photons()) {
        throw std::invalid_argument("loss spec n_sent differs from the number of input ports");
    }
}

void LossySampler::draw(SplitMix64 &rng, std::vector<int> &out) const {
    std::vector<int> subset;
    subsets_.draw(rng, subset);
    std::vector<int> ports;
    ports.reserve(subset.size());
    for (int idx : subset) {
        ports.push_back(sent_[static_cast<size_t>(idx)]);
    }
    boson_.draw_ports(rng, ports, out);
}

PmfSampler::PmfSampler(Pmf pmf, Model model) : pmf_(std::move(pmf)), model_(model) {
    if (pmf_.size() == 0) {
        throw std::invalid_argument("pmf sampler: empty pmf");
    }
    cdf_.resize(pmf_.size());
    double acc = 0.0;
    for (size_t k = 0; k < pmf_.size(); k++) {
        acc += std::max(0.0, pmf_.probability(k));
        cdf_[k] = acc;
    }
}

void PmfSampler::draw(SplitMix64 &rng, std::vector<int> &out) const {
    const double target = rng.uniform01() * cdf_.back();
    size_t pick = static_cast<size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), target) - cdf_.begin());
    pick = std::min(pick, cdf_.size() - 1);
    auto o = pmf_.outcome(pick);
    out.assign(o.begin(), o.end());
}

// ---------------------------------------------------------------------------
// Drivers

void generate_draws(const Sampler &sampler, uint64_t seed, uint64_t first, uint64_t count, std::span<int> out,
                    unsigned workers) {
    const size_t n = static_cast<size_t>(sampler.photons());
    if (out.size() != count * n) {
        throw std::invalid_argument("generate_draws: output buffer has wrong size");
    }
    auto block = [&](uint64_t lo, uint64_t hi) {
        std::vector<int> buf;
        for (uint64_t i = lo; i < hi; i++) {
            SplitMix64 rng(draw_seed(seed, first + i));
            sampler.draw(rng, buf);
            std::copy(buf.begin(), buf.end(), out.begin() + static_cast<std::ptrdiff_t>(i * n));
        }
    };
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const uint64_t used = std::min<uint64_t>(workers, count);
    if (used <= 1) {
        block(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (uint64_t w = 0; w < used; w++) {
        pool.emplace_back(block, count * w / used, count * (w + 1) / used);
    }
    for (auto &t : pool) {
        t.join();
    }
}

SampleSet generate(const Sampler &sampler, SampleHeader header, uint64_t count, unsigned workers) {
    header.m = sampler.modes();
    header.n = sampler.photons();
    header.model = sampler.model();
    const uint64_t seed = header.seed;
    SampleSet set(std::move(header));
    set.storage().resize(count * static_cast<uint64_t>(sampler.photons()));
    generate_draws(sampler, seed, 0, count, set.storage(), workers);
    return set;
}

namespace {

SampleHeader header_for(const TransferMatrix &u, const InputConfig &input, uint64_t seed) {
    SampleHeader h;
    h.m = input.modes();
    h.n = input.photons();
    h.input = input.ports();
    h.matrix_hash = fingerprint(u.elements);
    h.seed = seed;
    return h;
}

}  // namespace

SampleSet sample_boson(const TransferMatrix &u, const InputConfig &input, uint64_t count, uint64_t seed,
                       unsigned workers) {
    return generate(BosonSampler(u, input), header_for(u, input, seed), count, workers);
}

SampleSet sample_distinguishable(const TransferMatrix &u, const InputConfig &input, uint64_t count, uint64_t seed,
                                 unsigned workers) {
    return generate(DistinguishableSampler(u, input), header_for(u, input, seed), count, workers);
}

SampleSet sample_uniform(int m, int n, uint64_t count, uint64_t seed, OutcomeSpace space, unsigned workers) {
    SampleHeader h;
    h.seed = seed;
    h.space = space;
    return generate(UniformSampler(m, n, space), std::move(h), count, workers);
}

SampleSet sample_lossy(const TransferMatrix &u, const InputConfig &input, const LossSpec &loss, uint64_t count,
                       uint64_t seed, unsigned workers, std::span<const double> efficiencies) {
    return generate(LossySampler(u, input, loss, efficiencies), header_for(u, input, seed), count, workers);
}

SampleSet sample_partial(const TransferMatrix &u, const InputConfig &input, const GramMatrix &s, uint64_t count,
                         uint64_t seed, unsigned workers) {
    require_unitary(u);
    return generate(PmfSampler(distribution_partial(u, input, s), Model::partial), header_for(u, input, seed), count,
                    workers);
}

}  // namespace bosim
