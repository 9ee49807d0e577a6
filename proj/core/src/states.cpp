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

#include "bosim/states.hpp"

#include <algorithm>
#include <stdexcept>

namespace bosim {

InputConfig::InputConfig(int m, std::vector<int> modes) : m_(m), modes_(std::move(modes)) {
    if (m_ < 1) {
        throw std::invalid_argument("input config: mode count must be positive");
    }
    if (modes_.empty()) {
        throw std::invalid_argument("input config: at least one photon is required");
    }
    std::sort(modes_.begin(), modes_.end());
    if (std::adjacent_find(modes_.begin(), modes_.end()) != modes_.end()) {
        throw std::invalid_argument("input config: input modes must be distinct (one photon per port)");
    }
    if (modes_.front() < 0 || modes_.back() >= m_) {
        throw std::invalid_argument("input config: input mode out of range");
    }
}

InputConfig InputConfig::from_one_based(int m, std::span<const int> labels) {
    std::vector<int> modes;
    modes.reserve(labels.size());
    for (int label : labels) {
        modes.push_back(label - 1);
    }
    return InputConfig(m, std::move(modes));
}

std::vector<int> InputConfig::one_based() const {
    std::vector<int> out(modes_);
    for (auto &v : out) {
        v += 1;
    }
    return out;
}

OutputState::OutputState(int m, std::vector<int> modes) : m_(m), modes_(std::move(modes)) {
    if (m_ < 1) {
        throw std::invalid_argument("output state: mode count must be positive");
    }
    std::sort(modes_.begin(), modes_.end());
    if (!modes_.empty() && (modes_.front() < 0 || modes_.back() >= m_)) {
        throw std::invalid_argument("output state: mode out of range");
    }
}

OutputState OutputState::from_occupation(std::span<const int> occupation) {
    std::vector<int> modes;
    for (size_t i = 0; i < occupation.size(); i++) {
        if (occupation[i] < 0) {
            throw std::invalid_argument("output state: negative occupation");
        }
        modes.insert(modes.end(), static_cast<size_t>(occupation[i]), static_cast<int>(i));
    }
    return OutputState(static_cast<int>(occupation.size()), std::move(modes));
}

std::vector<int> OutputState::occupation() const {
    std::vector<int> occ(static_cast<size_t>(m_), 0);
    for (int d : modes_) {
        occ[static_cast<size_t>(d)]++;
    }
    return occ;
}

double OutputState::occupation_factorial() const { return bosim::occupation_factorial(modes_); }

bool OutputState::collision_free() const {
    return std::adjacent_find(modes_.begin(), modes_.end()) == modes_.end();
}

bool colex_less(std::span<const int> a, std::span<const int> b) {
    for (size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) {
            return a[k] < b[k];
        }
    }
    return false;
}

double occupation_factorial(std::span<const int> ascending_modes) {
    double result = 1.0;
    size_t run = 1;
    for (size_t k = 1; k <= ascending_modes.size(); k++) {
        if (k < ascending_modes.size() && ascending_modes[k] == ascending_modes[k - 1]) {
            run++;
            result *= static_cast<double>(run);
        } else {
            run = 1;
        }
    }
    return result;
}

bool next_multiset_colex(std::span<int> modes, int m) {
    const size_t n = modes.size();
    for (size_t i = 0; i < n; i++) {
        const int limit = (i + 1 < n) ? modes[i + 1] : m - 1;
        if (modes[i] < limit) {
            modes[i]++;
            for (size_t j = 0; j < i; j++) {
                modes[j] = 0;
            }
            return true;
        }
    }
    return false;
}

bool next_combination_colex(std::span<int> modes, int m) {
    const size_t n = modes.size();
    for (size_t i = 0; i < n; i++) {
        const int limit = (i + 1 < n) ? modes[i + 1] - 1 : m - 1;
        if (modes[i] < limit) {
            modes[i]++;
            for (size_t j = 0; j < i; j++) {
                modes[j] = static_cast<int>(j);
            }
            return true;
        }
    }
    return false;
}

std::string_view to_string(Model model) {
    switch (model) {
        case Model::boson:
            return "boson";
        case Model::distinguishable:
            return "distinguishable";
        case Model::uniform:
            return "uniform";
        case Model::lossy:
            return "lossy";
        case Model::partial:
            return "partial";
    }
    return "unknown";
}

std::string_view to_string(OutcomeSpace space) {
    return space == OutcomeSpace::collision_free ? "collision-free" : "full";
}

Model parse_model(std::string_view text) {
    for (Model m : {Model::boson, Model::distinguishable, Model::uniform, Model::lossy, Model::partial}) {
        if (to_string(m) == text) {
            return m;
        }
    }
    throw std::invalid_argument("unknown model '" + std::string(text) + "'");
}

OutcomeSpace parse_space(std::string_view text) {
    if (text == "collision-free" || text == "collision_free") {
        return OutcomeSpace::collision_free;
    }
    if (text == "full") {
        return OutcomeSpace::full;
    }
    throw std::invalid_argument("unknown outcome space '" + std::string(text) + "'");
}

OutputState SampleSet::state(size_t i) const {
    auto d = draw(i);
    return OutputState(header_.m, std::vector<int>(d.begin(), d.end()));
}

void SampleSet::push_back(std::span<const int> ascending_modes) {
    if (static_cast<int>(ascending_modes.size()) != header_.n) {
        throw std::invalid_argument("sample set: draw photon count differs from header");
    }
    modes_.insert(modes_.end(), ascending_modes.begin(), ascending_modes.end());
}

}  // namespace bosim
