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

#ifndef LACC_NOISE_MODELS_CHANNEL_H
#define LACC_NOISE_MODELS_CHANNEL_H

#include <cstdint>
#include <vector>

#include "lacc/pauli_algebra/pauli_string.h"
#include "lacc/util/rng.h"

namespace lacc {

/// Pauli on w qubits packed in base 4: digit i is x_i + 2 z_i (I=0, X=1, Z=2, Y=3).
uint64_t local_pauli_index(const PauliString &local);
PauliString local_pauli(uint64_t index, size_t weight);
/// Embeds a local index onto `support` of an n-qubit register.
PauliString embed_pauli(uint64_t index, const std::vector<size_t> &support, size_t n);

/// Stochastic Pauli channel on w qubits, independent of where it is placed.
class PauliChannel {
   public:
    PauliChannel() = default;

    /// Uniform weight p / (4^w - 1) on every non-identity Pauli.
    static PauliChannel depolarizing(double p, size_t weight);
    /// probs has 4^w entries; probs[0] is recomputed as the remainder.
    static PauliChannel from_probabilities(size_t weight, std::vector<double> probs);
    /// A single Pauli (given as local text, e.g. "XZ") with probability p.
    static PauliChannel single_pauli(const std::string &pauli, double p);

    size_t weight() const {
        return weight_;
    }
    uint64_t num_outcomes() const {
        return uint64_t{1} << (2 * weight_);
    }
    bool is_depolarizing() const {
        return depolarizing_;
    }
    double total_error_rate() const {
        return rate_;
    }
    /// Probability of the local Pauli `index` (identity included).
    double probability(uint64_t index) const;
    /// Dense probability vector (requires weight <= 12).
    std::vector<double> probabilities() const;

    /// Draws a non-identity outcome conditioned on an error occurring.
    uint64_t sample_error(Rng &rng) const;
    /// Draws from the full distribution by inverse CDF at u in [0, 1).
    uint64_t sample_inverse_cdf(double u) const;

    bool operator==(const PauliChannel &other) const;

   private:
    void build_sampler();

    size_t weight_ = 0;
    bool depolarizing_ = true;
    double rate_ = 0;
    std::vector<double> probs_;
    // Conditional sampler over non-identity outcomes.
    std::vector<double> cdf_;
    std::vector<double> alias_prob_;
    std::vector<uint64_t> alias_;
};

/// A channel placed on specific qubits.
struct StochasticPauliChannel {
    std::vector<size_t> support;
    PauliChannel channel;

    double total_error_rate() const {
        return channel.total_error_rate();
    }
    double probability(const PauliString &p) const;
};

StochasticPauliChannel depolarizing(double p, const std::vector<size_t> &support);

/// l1 distance sum_P |a(P) - b(P)|, identity included. Exact diamond distance for Pauli channels.
double pauli_diamond_distance(const PauliChannel &a, const PauliChannel &b);
double pauli_diamond_distance(const StochasticPauliChannel &a, const StochasticPauliChannel &b);

using ChannelPair = std::pair<StochasticPauliChannel, StochasticPauliChannel>;

/// M^-1 sum_k sum_j ||E_kj - E'_kj||.
double robustness_bound(const std::vector<std::vector<ChannelPair>> &per_trap_pairs, size_t m);

}  // namespace lacc

#endif
