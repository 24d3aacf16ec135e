// Copyright 2026 The lacc Authors
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

#ifndef LACC_UTIL_RNG_H
#define LACC_UTIL_RNG_H

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace lacc {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
uint64_t splitmix64(uint64_t x);

/// Derives a seed for the stream labelled (a, b) under a master seed.
uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0);

/// Seeded random source.
///
/// Wraps std::mt19937_64. The helper distributions are written out explicitly
/// (instead of using <random> distributions) so that streams are identical
/// across standard library implementations.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }
    result_type operator()() {
        return engine_();
    }

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform() {
        return (double)(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). n must be positive.
    uint64_t below(uint64_t n);

    bool coin() {
        return (engine_() >> 63) != 0;
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    /// Standard normal variate (Box-Muller, one draw per call).
    double normal() {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    /// Number of failures before the first success of a Bernoulli(p) process.
    /// Returns UINT64_MAX when p == 0.
    uint64_t geometric(double p);

    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (size_t k = items.size(); k > 1; k--) {
            size_t j = (size_t)below(k);
            std::swap(items[k - 1], items[j]);
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace lacc

#endif
