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

#include "lacc/accreditation/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lacc {

SoundnessParams SoundnessParams::lemma2() {
    return {0.0, 0.5, SoundnessLemma::Lemma2};
}

SoundnessParams SoundnessParams::lemma3() {
    return {0.5, 0.75, SoundnessLemma::Lemma3};
}

SoundnessParams SoundnessParams::lemma4() {
    return {0.875, 15.0 / 16.0, SoundnessLemma::Lemma4};
}

SoundnessParams SoundnessParams::from_beta(double beta) {
    if (beta == 0.0) return lemma2();
    if (beta == 0.5) return lemma3();
    if (beta == 0.875) return lemma4();
    throw std::invalid_argument("beta must be one of 0, 0.5, 0.875");
}

SoundnessParams SoundnessParams::from_string(const std::string &name) {
    if (name == "lemma2") return lemma2();
    if (name == "lemma3") return lemma3();
    if (name == "lemma4") return lemma4();
    throw std::invalid_argument("unknown soundness '" + name + "' (expected lemma2, lemma3 or lemma4)");
}

std::string to_string(SoundnessLemma lemma) {
    switch (lemma) {
        case SoundnessLemma::Lemma2:
            return "lemma2";
        case SoundnessLemma::Lemma3:
            return "lemma3";
        case SoundnessLemma::Lemma4:
            return "lemma4";
    }
    return "?";
}

uint64_t required_traps(double epsilon, double alpha) {
    if (!(epsilon > 0 && epsilon <= 1) || !(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("required_traps: need 0 < epsilon <= 1 and 0 < alpha < 1");
    }
    double bound = 2.0 / (epsilon * epsilon) * std::log(4.0 / (1.0 - alpha));
    return (uint64_t)std::floor(bound) + 1;
}

double achieved_epsilon(uint64_t m, double alpha) {
    if (m == 0 || !(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("achieved_epsilon: need m >= 1 and 0 < alpha < 1");
    }
    return std::sqrt(2.0 * std::log(4.0 / (1.0 - alpha)) / (double)m);
}

double gamma_from_counts(uint64_t n_inc, uint64_t m, double beta) {
    if (m == 0 || n_inc > m) throw std::invalid_argument("gamma_from_counts: need 0 <= n_inc <= m, m >= 1");
    if (!(beta >= 0 && beta < 1)) throw std::invalid_argument("gamma_from_counts: beta must lie in [0, 1)");
    return 2.0 * ((double)n_inc / (double)m) / (1.0 - beta);
}

double expectation_error_bound(double gamma, double operator_norm) {
    if (gamma < 0 || operator_norm < 0) throw std::invalid_argument("expectation_error_bound: negative input");
    return 2.0 * gamma * operator_norm;
}

double infidelity_bound(double gamma) {
    return gamma;
}

EntropyBound entropy_density_bound(double gamma, size_t n) {
    if (n == 0 || gamma < 0) throw std::invalid_argument("entropy_density_bound: need n >= 1, gamma >= 0");
    double tail = std::ldexp(1.0, -(int)std::min<size_t>(n, 1000));
    // The formula peaks at gamma = 1 / (1 + 2^-n); past it the peak value is kept.
    double peak = 1.0 / (1.0 + tail);
    bool saturated = gamma >= peak;
    double g = saturated ? peak : gamma;
    double arg = 1.0 - 2.0 * g + g * g * (1.0 + tail);
    return {std::max(-std::log2(arg) / (double)n, 0.0), saturated};
}

double mitigation_threshold() {
    return 1.0 - std::exp(-kMitigationExponent);
}

bool mitigation_efficiency_check(double gamma) {
    return gamma <= mitigation_threshold();
}

}  // namespace lacc
