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

#ifndef LACC_NOISE_MODELS_SAMPLER_H
#define LACC_NOISE_MODELS_SAMPLER_H

#include <cstdint>
#include <vector>

#include "lacc/noise_models/noise_plan.h"
#include "lacc/util/rng.h"

namespace lacc {

/// One sampled error: the local Pauli index drawn at a location.
struct NoiseHit {
    uint32_t location;
    uint64_t pauli;

    bool operator==(const NoiseHit &other) const {
        return location == other.location && pauli == other.pauli;
    }
};

enum class CorrelationKind { Independent, SharedCoefficient };

struct Correlation {
    CorrelationKind kind = CorrelationKind::Independent;
    /// SharedCoefficient: probability that a location reuses the per-shot latent draw.
    double strength = 0;
};

/// Per-shot error sampler over a noise plan.
///
/// Independent sampling visits only the locations that fire, using geometric
/// skips within groups of equal-rate channels. The shared-coefficient sampler
/// draws one latent uniform per shot; each location reuses it with probability
/// `strength` and otherwise draws fresh, then maps it through the channel's
/// inverse CDF.
class NoiseSampler {
   public:
    explicit NoiseSampler(const NoisePlan &plan, Correlation correlation = {});

    /// Replaces `hits` with this shot's errors sorted by location.
    void sample(Rng &rng, std::vector<NoiseHit> &hits) const;

    const NoisePlan &plan() const {
        return *plan_;
    }

   private:
    const NoisePlan *plan_;
    Correlation correlation_;
    struct Group {
        uint32_t channel;
        double rate;
        std::vector<uint32_t> locations;
    };
    std::vector<Group> groups_;
};

}  // namespace lacc

#endif
