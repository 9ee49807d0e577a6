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
#include <limits>

namespace bosim {

inline constexpr uint64_t splitmix64_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of the private stream used for draw `index` of a run seeded with
/// `master`. A stateless mix, so draws can be generated in any order and on
/// any number of workers with identical results.
inline constexpr uint64_t draw_seed(uint64_t master, uint64_t index) {
    return splitmix64_mix(splitmix64_mix(master ^ 0x6a09e667f3bcc909ULL) + index);
}

/// SplitMix64: small per-draw generator satisfying UniformRandomBitGenerator.
class SplitMix64 {
   public:
    using result_type = uint64_t;

    explicit constexpr SplitMix64(uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }

    constexpr result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64_mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    constexpr uint64_t below(uint64_t bound) {
        const uint64_t limit = max() - max() % bound;
        uint64_t x = (*this)();
        while (x >= limit) {
            x = (*this)();
        }
        return x % bound;
    }

   private:
    uint64_t state_;
};

}  // namespace bosim
