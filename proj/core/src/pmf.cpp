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

#include "bosim/pmf.hpp"

#include <algorithm>
#include <stdexcept>

namespace bosim {

std::optional<size_t> Pmf::find(std::span<const int> ascending_modes) const {
    size_t lo = 0;
    size_t hi = size();
    while (lo < hi) {
        const size_t mid = lo + (hi - lo) / 2;
        if (colex_less(outcome(mid), ascending_modes)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if (lo < size() && std::equal(ascending_modes.begin(), ascending_modes.end(), outcome(lo).begin())) {
        return lo;
    }
    return std::nullopt;
}

double Pmf::probability_of(std::span<const int> ascending_modes) const {
    auto idx = find(ascending_modes);
    return idx ? probs_[*idx] : 0.0;
}

void Pmf::push_back(std::span<const int> ascending_modes, double p) {
    if (static_cast<int>(ascending_modes.size()) != n_) {
        throw std::invalid_argument("pmf: outcome photon count mismatch");
    }
    if (p < 0.0) {
        throw std::invalid_argument("pmf: negative probability");
    }
    if (!probs_.empty() && !colex_less(outcome(size() - 1), ascending_modes)) {
        throw std::invalid_argument("pmf: outcomes must be appended in increasing colex order");
    }
    modes_.insert(modes_.end(), ascending_modes.begin(), ascending_modes.end());
    probs_.push_back(p);
}

double Pmf::total() const {
    double sum = 0.0;
    for (double p : probs_) {
        sum += p;
    }
    return sum;
}

void Pmf::normalize() {
    const double t = total();
    if (!(t > 0.0)) {
        throw std::runtime_error("pmf: cannot normalize zero total mass");
    }
    raw_mass_ = t;
    for (double &p : probs_) {
        p /= t;
    }
}

Pmf Pmf::mix(const Pmf &a, double wa, const Pmf &b, double wb) {
    if (a.m_ != b.m_ || a.n_ != b.n_) {
        throw std::invalid_argument("pmf: cannot mix pmfs over different outcome spaces");
    }
    Pmf out(a.m_, a.n_);
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && colex_less(a.outcome(i), b.outcome(j)))) {
            out.push_back(a.outcome(i), wa * a.probs_[i]);
            i++;
        } else if (i == a.size() || colex_less(b.outcome(j), a.outcome(i))) {
            out.push_back(b.outcome(j), wb * b.probs_[j]);
            j++;
        } else {
            out.push_back(a.outcome(i), wa * a.probs_[i] + wb * b.probs_[j]);
            i++;
            j++;
        }
    }
    return out;
}

}  // namespace bosim
