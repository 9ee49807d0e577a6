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

#include <optional>
#include <span>
#include <vector>

#include "bosim/states.hpp"

namespace bosim {

/// Probability mass function over output states of fixed (m, n).
///
/// Outcomes are held in strictly increasing colex order with flat storage, so
/// lookups are binary searches and two pmfs can be merged linearly.
class Pmf {
   public:
    Pmf() = default;
    Pmf(int m, int n) : m_(m), n_(n) {}

    int modes() const { return m_; }
    int photons() const { return n_; }
    size_t size() const { return probs_.size(); }

    std::span<const int> outcome(size_t i) const {
        return {modes_.data() + i * static_cast<size_t>(n_), static_cast<size_t>(n_)};
    }
    double probability(size_t i) const { return probs_[i]; }
    std::span<const double> probabilities() const { return probs_; }

    /// Probability of an ascending mode list; 0 when absent.
    double probability_of(std::span<const int> ascending_modes) const;
    std::optional<size_t> find(std::span<const int> ascending_modes) const;

    /// Appends an outcome that must sort strictly after the current last one.
    void push_back(std::span<const int> ascending_modes, double p);

    double total() const;
    /// Divides by the total; throws if the total is not positive. The mass seen
    /// before division is kept in raw_mass().
    void normalize();
    double raw_mass() const { return raw_mass_; }

    /// Sum of two pmfs scaled by weights, over the union of supports.
    static Pmf mix(const Pmf &a, double wa, const Pmf &b, double wb);

   private:
    int m_ = 0;
    int n_ = 0;
    std::vector<int> modes_;
    std::vector<double> probs_;
    double raw_mass_ = 1.0;
};

}  // namespace bosim
