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

#include "lacc/noise_models/sampler.h"

#include <algorithm>
#include <stdexcept>

namespace lacc {

NoiseSampler::NoiseSampler(const NoisePlan &plan, Correlation correlation)
    : plan_(&plan), correlation_(correlation) {
    if (!(correlation.strength >= 0 && correlation.strength <= 1)) {
        throw std::invalid_argument("NoiseSampler: correlation strength must lie in [0, 1]");
    }
    std::vector<int64_t> group_of(plan.channels.size(), -1);
    for (size_t i = 0; i < plan.locations.size(); i++) {
        uint32_t c = plan.locations[i].channel;
        if (plan.channels[c].total_error_rate() <= 0) {
            continue;
        }
        if (group_of[c] < 0) {
            group_of[c] = (int64_t)groups_.size();
            groups_.push_back({c, plan.channels[c].total_error_rate(), {}});
        }
        groups_[group_of[c]].locations.push_back((uint32_t)i);
    }
}

void NoiseSampler::sample(Rng &rng, std::vector<NoiseHit> &hits) const {
    hits.clear();
    if (correlation_.kind == CorrelationKind::SharedCoefficient) {
        double latent = rng.uniform();
        for (size_t i = 0; i < plan_->locations.size(); i++) {
            const PauliChannel &c = plan_->channel_at(i);
            double u = rng.uniform() < correlation_.strength ? latent : rng.uniform();
            uint64_t p = c.sample_inverse_cdf(u);
            if (p != 0) {
                hits.push_back({(uint32_t)i, p});
            }
        }
        return;
    }
    for (const auto &g : groups_) {
        const PauliChannel &c = plan_->channels[g.channel];
        size_t size = g.locations.size();
        if (g.rate >= 1) {
            for (uint32_t loc : g.locations) {
                hits.push_back({loc, c.sample_error(rng)});
            }
            continue;
        }
        uint64_t k = rng.geometric(g.rate);
        while (k < size) {
            hits.push_back({g.locations[k], c.sample_error(rng)});
            uint64_t skip = rng.geometric(g.rate);
            if (skip >= size) {
                break;
            }
            k += 1 + skip;
        }
    }
    std::sort(hits.begin(), hits.end(), [](const NoiseHit &a, const NoiseHit &b) { return a.location < b.location; });
}

}  // namespace lacc
