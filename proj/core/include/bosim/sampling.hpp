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
#include <memory>
#include <span>
#include <vector>

#include "bosim/matrix.hpp"
#include "bosim/pmf.hpp"
#include "bosim/rng.hpp"
#include "bosim/states.hpp"

namespace bosim {

/// Largest outcome space exact_distribution and friends will enumerate.
inline constexpr uint64_t kMaxExactStates = 10'000'000;
/// Per-draw 2^n cost guard for the exact boson sampler.
inline constexpr int kMaxSamplerPhotons = 22;
/// (n!)^2 guard for the partial-distinguishability model.
inline constexpr int kMaxPartialPhotons = 6;

/// Pairwise overlaps S[j][k] = <photon j | photon k> of the photons' internal
/// states. Unit diagonal, Hermitian, positive semidefinite.
class GramMatrix {
   public:
    /// Throws std::invalid_argument if the matrix is not a valid Gram matrix.
    explicit GramMatrix(CMatrix overlaps);

    /// All off-diagonal overlaps equal to x (real, in [-1/(n-1), 1]).
    static GramMatrix uniform(size_t n, double x);
    /// All pairs with indistinguishability v = |overlap|^2, the quantity a
    /// two-photon interference visibility measures. Off-diagonals are sqrt(v).
    static GramMatrix from_indistinguishability(size_t n, double v);

    size_t photons() const { return s_.rows(); }
    const CMatrix &overlaps() const { return s_; }

   private:
    CMatrix s_;
};

/// Whether a Hermitian matrix is PSD, by Cholesky with a pivot tolerance.
bool is_positive_semidefinite(const CMatrix &hermitian, double tol = 1e-10);

/// n_sent photons injected, n_detect detected.
struct LossSpec {
    int n_sent = 0;
    int n_detect = 0;

    void validate() const;
    int lost() const { return n_sent - n_detect; }
};

/// Throws std::invalid_argument unless `u` is flagged unitary or measures
/// unitary within kUnitarityTolerance.
void require_unitary(const TransferMatrix &u);

/// Throws std::domain_error when the outcome space exceeds kMaxExactStates.
void require_enumerable(int m, int n, OutcomeSpace space);

/// |Perm M|^2 / prod occ! for indistinguishable photons.
double prob_output(const TransferMatrix &u, const InputConfig &input, const OutputState &out);
double prob_output(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes);

/// Perm(|M|^2) / prod occ! for fully distinguishable photons.
double prob_output_distinguishable(const TransferMatrix &u, const InputConfig &input, const OutputState &out);
double prob_output_distinguishable(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes);

/// Partial distinguishability: (1/prod occ!) sum_{sigma,tau} prod_k
/// S[tau(k)][sigma(k)] M[k][sigma(k)] conj(M[k][tau(k)]).
double prob_output_partial(const CMatrix &u, std::span<const int> ports, std::span<const int> out_modes,
                           const GramMatrix &s);

/// Indistinguishable pmf over all C(m+n-1, n) outcomes in colex order.
/// raw_mass() of the result holds the pre-normalization total.
Pmf exact_distribution(const TransferMatrix &u, const InputConfig &input);
Pmf exact_distribution_distinguishable(const TransferMatrix &u, const InputConfig &input);
Pmf distribution_partial(const TransferMatrix &u, const InputConfig &input, const GramMatrix &s);
/// Mixture over detected subsets with the lossy sampler's subset law.
Pmf exact_distribution_lossy(const TransferMatrix &u, const InputConfig &input, const LossSpec &loss,
                             std::span<const double> efficiencies = {});
Pmf uniform_distribution(int m, int n, OutcomeSpace space);

/// Subset law of the lossy model: each input photon j survives independently
/// with efficiency eta_j, conditioned on exactly n_detect survivors. Empty
/// efficiencies mean uniform loss, i.e. every subset equally likely.
class SurvivorSubsets {
   public:
    SurvivorSubsets(int n_sent, int n_detect, std::span<const double> efficiencies = {});

    /// Indices into the sent list, ascending.
    void draw(SplitMix64 &rng, std::vector<int> &out) const;
    /// Probability of one ascending subset of indices.
    double probability(std::span<const int> subset) const;
    /// Enumerates all subsets with their probabilities (colex order).
    std::vector<std::pair<std::vector<int>, double>> enumerate() const;

    int sent() const { return n_sent_; }
    int detected() const { return n_detect_; }

   private:
    int n_sent_;
    int n_detect_;
    std::vector<double> odds_;
    // suffix_[j][r] = e_r(odds_[j..]), elementary symmetric polynomials.
    std::vector<std::vector<double>> suffix_;
};

/// One draw per call; `out` receives n ascending output modes.
class Sampler {
   public:
    virtual ~Sampler() = default;
    virtual Model model() const = 0;
    virtual int modes() const = 0;
    virtual int photons() const = 0;
    virtual void draw(SplitMix64 &rng, std::vector<int> &out) const = 0;
};

/// Exact sampler for indistinguishable photons following Clifford & Clifford:
/// permute the input columns uniformly, then pick output rows one at a time
/// from the chain of marginal pmfs, each built from the column-deleted minor
/// permanents of the rows chosen so far.
class BosonSampler final : public Sampler {
   public:
    BosonSampler(const TransferMatrix &u, const InputConfig &input);

    Model model() const override { return Model::boson; }
    int modes() const override { return static_cast<int>(u_.rows()); }
    int photons() const override { return static_cast<int>(ports_.size()); }
    void draw(SplitMix64 &rng, std::vector<int> &out) const override;

    /// Draw with an arbitrary subset of input ports (used by the lossy sampler).
    void draw_ports(SplitMix64 &rng, std::span<const int> ports, std::vector<int> &out) const;

   private:
    CMatrix u_;
    std::vector<int> ports_;
};

class DistinguishableSampler final : public Sampler {
   public:
    DistinguishableSampler(const TransferMatrix &u, const InputConfig &input);

    Model model() const override { return Model::distinguishable; }
    int modes() const override { return m_; }
    int photons() const override { return static_cast<int>(cdfs_.size()); }
    void draw(SplitMix64 &rng, std::vector<int> &out) const override;

   private:
    int m_;
    std::vector<std::vector<double>> cdfs_;
};

/// Uniform over the outcome space by unranking a uniform index.
class UniformSampler final : public Sampler {
   public:
    UniformSampler(int m, int n, OutcomeSpace space);

    Model model() const override { return Model::uniform; }
    int modes() const override { return m_; }
    int photons() const override { return n_; }
    void draw(SplitMix64 &rng, std::vector<int> &out) const override;

    uint64_t space_size() const { return size_; }
    /// Outcome of a given colex rank.
    void unrank(uint64_t rank, std::vector<int> &out) const;

   private:
    int m_;
    int n_;
    OutcomeSpace space_;
    uint64_t size_;
    // binom_[a][b] = C(a, b), saturating at UINT64_MAX.
    std::vector<std::vector<uint64_t>> binom_;
};

class LossySampler final : public Sampler {
   public:
    LossySampler(const TransferMatrix &u, const InputConfig &input, const LossSpec &loss,
                 std::span<const double> efficiencies = {});

    Model model() const override { return Model::lossy; }
    int modes() const override { return boson_.modes(); }
    int photons() const override { return subsets_.detected(); }
    void draw(SplitMix64 &rng, std::vector<int> &out) const override;

   private:
    std::vector<int> sent_;
    SurvivorSubsets subsets_;
    BosonSampler boson_;
};

/// Categorical sampler over an explicit pmf by inverse CDF in colex order.
class PmfSampler final : public Sampler {
   public:
    PmfSampler(Pmf pmf, Model model);

    Model model() const override { return model_; }
    int modes() const override { return pmf_.modes(); }
    int photons() const override { return pmf_.photons(); }
    void draw(SplitMix64 &rng, std::vector<int> &out) const override;

   private:
    Pmf pmf_;
    Model model_;
    std::vector<double> cdf_;
};

/// Fills `out` (count * n ints) with draws first..first+count-1. Draw i uses
/// its own generator seeded with draw_seed(seed, i), so the result is
/// identical for every worker count (0 = hardware concurrency).
void generate_draws(const Sampler &sampler, uint64_t seed, uint64_t first, uint64_t count, std::span<int> out,
                    unsigned workers = 1);

SampleSet generate(const Sampler &sampler, SampleHeader header, uint64_t count, unsigned workers = 1);

SampleSet sample_boson(const TransferMatrix &u, const InputConfig &input, uint64_t count, uint64_t seed,
                       unsigned workers = 1);
SampleSet sample_distinguishable(const TransferMatrix &u, const InputConfig &input, uint64_t count, uint64_t seed,
                                 unsigned workers = 1);
SampleSet sample_uniform(int m, int n, uint64_t count, uint64_t seed,
                         OutcomeSpace space = OutcomeSpace::collision_free, unsigned workers = 1);
SampleSet sample_lossy(const TransferMatrix &u, const InputConfig &input, const LossSpec &loss, uint64_t count,
                       uint64_t seed, unsigned workers = 1, std::span<const double> efficiencies = {});
SampleSet sample_partial(const TransferMatrix &u, const InputConfig &input, const GramMatrix &s, uint64_t count,
                         uint64_t seed, unsigned workers = 1);

}  // namespace bosim
