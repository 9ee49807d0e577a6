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

// Mode indices are 0-based everywhere inside the library. Conversion to the
// 1-based labels used in files and on the command line happens only in the
// I/O layers (sample_io, csv, the CLI).

namespace bosim {

/// Which input ports carry a single photon. Strictly ascending, collision free.
class InputConfig {
   public:
    InputConfig() = default;
    /// Throws std::invalid_argument unless 1 <= n <= m and modes are strictly
    /// ascending in [0, m). Unsorted distinct input is sorted first.
    InputConfig(int m, std::vector<int> modes);

    static InputConfig from_one_based(int m, std::span<const int> labels);

    int modes() const { return m_; }
    int photons() const { return static_cast<int>(modes_.size()); }
    const std::vector<int> &ports() const { return modes_; }
    std::vector<int> one_based() const;

    bool operator==(const InputConfig &) const = default;

   private:
    int m_ = 0;
    std::vector<int> modes_;
};

/// Output occupation pattern, stored canonically as the ascending list of
/// occupied modes with repetition (a mode holding k photons appears k times).
class OutputState {
   public:
    OutputState() = default;
    /// `modes` may be in any order; it is sorted. Throws on out-of-range modes.
    OutputState(int m, std::vector<int> modes);

    static OutputState from_occupation(std::span<const int> occupation);

    int modes() const { return m_; }
    int photons() const { return static_cast<int>(modes_.size()); }
    const std::vector<int> &mode_list() const { return modes_; }
    std::vector<int> occupation() const;
    /// prod_i occupation_i!
    double occupation_factorial() const;
    bool collision_free() const;

    bool operator==(const OutputState &) const = default;

   private:
    int m_ = 0;
    std::vector<int> modes_;
};

/// Colexicographic order on ascending mode lists of equal length: compare from
/// the last position backwards. This is the enumeration and reporting order
/// for every outcome space in the library.
bool colex_less(std::span<const int> a, std::span<const int> b);

/// prod_i occupation_i! of an ascending mode list.
double occupation_factorial(std::span<const int> ascending_modes);

/// Advance an ascending mode list (repetition allowed) to its colex successor
/// over m modes. Returns false after the last state (m-1, ..., m-1).
bool next_multiset_colex(std::span<int> modes, int m);

/// Same for strictly ascending lists (collision-free space).
bool next_combination_colex(std::span<int> modes, int m);

enum class Model { boson, distinguishable, uniform, lossy, partial };
enum class OutcomeSpace { collision_free, full };

std::string_view to_string(Model model);
std::string_view to_string(OutcomeSpace space);
Model parse_model(std::string_view text);
OutcomeSpace parse_space(std::string_view text);

/// Generation metadata shared by every draw of a SampleSet.
struct SampleHeader {
    Model model = Model::boson;
    int m = 0;
    /// Detected photons per draw.
    int n = 0;
    /// Input ports, 0-based. For lossy sets these are all n_sent ports; empty for uniform sets.
    std::vector<int> input;
    uint64_t matrix_hash = 0;
    uint64_t seed = 0;
    OutcomeSpace space = OutcomeSpace::full;

    bool operator==(const SampleHeader &) const = default;
};

/// Ordered list of draws with flat storage (n ints per draw).
class SampleSet {
   public:
    SampleSet() = default;
    explicit SampleSet(SampleHeader header) : header_(std::move(header)) {}

    const SampleHeader &header() const { return header_; }
    int photons() const { return header_.n; }
    size_t size() const { return header_.n == 0 ? 0 : modes_.size() / static_cast<size_t>(header_.n); }
    bool empty() const { return modes_.empty(); }

    std::span<const int> draw(size_t i) const {
        return {modes_.data() + i * static_cast<size_t>(header_.n), static_cast<size_t>(header_.n)};
    }
    OutputState state(size_t i) const;

    /// Appends an ascending mode list of exactly n entries.
    void push_back(std::span<const int> ascending_modes);
    void reserve(size_t draws) { modes_.reserve(draws * static_cast<size_t>(header_.n)); }

    /// Raw storage; used by the parallel generators.
    std::vector<int> &storage() { return modes_; }
    const std::vector<int> &storage() const { return modes_; }

   private:
    SampleHeader header_;
    std::vector<int> modes_;
};

}  // namespace bosim
