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

#include "lacc/util/rng.h"

#include <cmath>

namespace lacc {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b) {
    uint64_t h = splitmix64(master ^ 0x6C61636353454544ULL);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ (b * 0xD6E8FEB86659FD93ULL));
    return h;
}

uint64_t Rng::below(uint64_t n) {
    // Rejection sampling on the top of the range keeps the result unbiased.
    uint64_t limit = max() - (max() % n + 1) % n;
    while (true) {
        uint64_t v = engine_();
        if (v <= limit) {
            return v % n;
        }
    }
}

uint64_t Rng::geometric(double p) {
    if (p >= 1) {
        return 0;
    }
    if (p <= 0) {
        return std::numeric_limits<uint64_t>::max();
    }
    double u = 1.0 - uniform();  // in (0, 1]
    double k = std::floor(std::log(u) / std::log1p(-p));
    if (k >= 1.8e19) {
        return std::numeric_limits<uint64_t>::max();
    }
    return (uint64_t)k;
}

}  // namespace lacc
