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

#include "lacc/noise_models/channel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lacc {

namespace {

constexpr size_t kMaxDenseWeight = 12;
constexpr uint64_t kAliasThreshold = 32;
constexpr double kProbTol = 1e-12;

void check_probability(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
}

}  // namespace

uint64_t local_pauli_index(const PauliString &local) {
    if (local.num_qubits() > 31) {
        throw std::invalid_argument("local Pauli index supports at most 31 qubits");
    }
    uint64_t index = 0;
    for (size_t q = local.num_qubits(); q-- > 0;) {
        index = (index << 2) | (uint64_t)local.x(q) | ((uint64_t)local.z(q) << 1);
    }
    return index;
}

PauliString local_pauli(uint64_t index, size_t weight) {
    PauliString p(weight);
    for (size_t q = 0; q < weight; q++) {
        p.set_xz(q, (index >> (2 * q)) & 1, (index >> (2 * q + 1)) & 1);
    }
    return p;
}

PauliString embed_pauli(uint64_t index, const std::vector<size_t> &support, size_t n) {
    PauliString p(n);
    for (size_t i = 0; i < support.size(); i++) {
        p.set_xz(support[i], (index >> (2 * i)) & 1, (index >> (2 * i + 1)) & 1);
    }
    return p;
}

PauliChannel PauliChannel::depolarizing(double p, size_t weight) {
    check_probability(p);
    if (weight < 1 || weight > 31) {
        throw std::invalid_argument("depolarizing: weight must lie in [1, 31]");
    }
    PauliChannel c;
    c.weight_ = weight;
    c.depolarizing_ = true;
    c.rate_ = p;
    return c;
}

PauliChannel PauliChannel::from_probabilities(size_t weight, std::vector<double> probs) {
    if (weight < 1 || weight > kMaxDenseWeight) {
        throw std::invalid_argument("from_probabilities: weight out of range");
    }
    if (probs.size() != (size_t{1} << (2 * weight))) {
        throw std::invalid_argument("from_probabilities: need 4^w entries");
    }
    double total = 0;
    for (size_t i = 1; i < probs.size(); i++) {
        if (!(probs[i] >= 0)) {
            throw std::invalid_argument("from_probabilities: negative probability");
        }
        total += probs[i];
    }
    if (total > 1 + kProbTol) {
        throw std::invalid_argument("from_probabilities: error probabilities exceed 1");
    }
    total = std::min(total, 1.0);
    probs[0] = 1 - total;
    PauliChannel c;
    c.weight_ = weight;
    c.depolarizing_ = false;
    c.rate_ = total;
    c.probs_ = std::move(probs);
    c.build_sampler();
    return c;
}

PauliChannel PauliChannel::single_pauli(const std::string &pauli, double p) {
    check_probability(p);
    PauliString local = PauliString::from_text(pauli);
    if (local.is_identity()) {
        throw std::invalid_argument("single_pauli: identity Pauli");
    }
    std::vector<double> probs(size_t{1} << (2 * local.num_qubits()), 0.0);
    probs[local_pauli_index(local)] = p;
    return from_probabilities(local.num_qubits(), std::move(probs));
}

void PauliChannel::build_sampler() {
    uint64_t m = num_outcomes() - 1;
    cdf_.clear();
    alias_prob_.clear();
    alias_.clear();
    if (rate_ <= 0) {
        return;
    }
    if (m <= kAliasThreshold) {
        double acc = 0;
        for (uint64_t i = 1; i <= m; i++) {
            acc += probs_[i] / rate_;
            cdf_.push_back(acc);
        }
        cdf_.back() = 1.0;
        return;
    }
    // Vose alias method over the m non-identity outcomes.
    alias_prob_.assign(m, 0);
    alias_.assign(m, 0);
    std::vector<double> scaled(m);
    std::vector<uint64_t> small, large;
    for (uint64_t i = 0; i < m; i++) {
        scaled[i] = probs_[i + 1] / rate_ * (double)m;
        (scaled[i] < 1 ? small : large).push_back(i);
    }
    while (!small.empty() && !large.empty()) {
        uint64_t s = small.back(), l = large.back();
        small.pop_back();
        alias_prob_[s] = scaled[s];
        alias_[s] = l;
        scaled[l] = scaled[l] + scaled[s] - 1;
        if (scaled[l] < 1) {
            large.pop_back();
            small.push_back(l);
        }
    }
    for (uint64_t i : large) {
        alias_prob_[i] = 1;
    }
    for (uint64_t i : small) {
        alias_prob_[i] = 1;
    }
}

double PauliChannel::probability(uint64_t index) const {
    if (index >= num_outcomes()) {
        throw std::out_of_range("PauliChannel: outcome index out of range");
    }
    if (depolarizing_) {
        return index == 0 ? 1 - rate_ : rate_ / (double)(num_outcomes() - 1);
    }
    return probs_[index];
}

std::vector<double> PauliChannel::probabilities() const {
    if (weight_ > kMaxDenseWeight) {
        throw std::invalid_argument("PauliChannel: too many outcomes for a dense vector");
    }
    if (!depolarizing_) {
        return probs_;
    }
    std::vector<double> out(num_outcomes(), rate_ / (double)(num_outcomes() - 1));
    out[0] = 1 - rate_;
    return out;
}

uint64_t PauliChannel::sample_error(Rng &rng) const {
    uint64_t m = num_outcomes() - 1;
    if (depolarizing_) {
        return 1 + rng.below(m);
    }
    if (!cdf_.empty()) {
        double u = rng.uniform();
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        uint64_t k = (uint64_t)std::min<size_t>(it - cdf_.begin(), cdf_.size() - 1);
        return 1 + k;
    }
    uint64_t k = rng.below(m);
    return 1 + (rng.uniform() < alias_prob_[k] ? k : alias_[k]);
}

uint64_t PauliChannel::sample_inverse_cdf(double u) const {
    if (u < 1 - rate_) {
        return 0;
    }
    // Rescale the residual mass onto the non-identity outcomes.
    double v = (u - (1 - rate_)) / rate_;
    uint64_t m = num_outcomes() - 1;
    if (depolarizing_) {
        return 1 + std::min<uint64_t>((uint64_t)(v * (double)m), m - 1);
    }
    double acc = 0;
    for (uint64_t i = 1; i <= m; i++) {
        acc += probs_[i] / rate_;
        if (v < acc) {
            return i;
        }
    }
    for (uint64_t i = m; i >= 1; i--) {
        if (probs_[i] > 0) {
            return i;
        }
    }
    return m;
}

bool PauliChannel::operator==(const PauliChannel &other) const {
    if (weight_ != other.weight_ || depolarizing_ != other.depolarizing_ || rate_ != other.rate_) {
        return false;
    }
    return depolarizing_ || probs_ == other.probs_;
}

double StochasticPauliChannel::probability(const PauliString &p) const {
    PauliString local(support.size());
    for (size_t i = 0; i < support.size(); i++) {
        local.set_xz(i, p.x(support[i]), p.z(support[i]));
    }
    if (local.weight() != p.weight()) {
        return 0;
    }
    return channel.probability(local_pauli_index(local));
}

StochasticPauliChannel depolarizing(double p, const std::vector<size_t> &support) {
    if (support.empty()) {
        throw std::invalid_argument("depolarizing: empty support");
    }
    return {support, PauliChannel::depolarizing(p, support.size())};
}

double pauli_diamond_distance(const PauliChannel &a, const PauliChannel &b) {
    if (a.weight() != b.weight()) {
        throw std::invalid_argument("pauli_diamond_distance: support mismatch");
    }
    if (a.is_depolarizing() && b.is_depolarizing()) {
        return std::abs(a.total_error_rate() - b.total_error_rate()) * 2;
    }
    auto pa = a.probabilities();
    auto pb = b.probabilities();
    double total = 0;
    for (size_t i = 0; i < pa.size(); i++) {
        total += std::abs(pa[i] - pb[i]);
    }
    return total;
}

double pauli_diamond_distance(const StochasticPauliChannel &a, const StochasticPauliChannel &b) {
    if (a.support != b.support) {
        throw std::invalid_argument("pauli_diamond_distance: support mismatch");
    }
    return pauli_diamond_distance(a.channel, b.channel);
}

double robustness_bound(const std::vector<std::vector<ChannelPair>> &per_trap_pairs, size_t m) {
    if (m < 1) {
        throw std::invalid_argument("robustness_bound: m must be at least 1");
    }
    if (per_trap_pairs.empty()) {
        throw std::invalid_argument("robustness_bound: empty input");
    }
    double total = 0;
    for (const auto &pairs : per_trap_pairs) {
        for (const auto &[a, b] : pairs) {
            total += pauli_diamond_distance(a, b);
        }
    }
    return total / (double)m;
}

}  // namespace lacc
