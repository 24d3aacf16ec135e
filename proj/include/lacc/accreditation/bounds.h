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

#ifndef LACC_ACCREDITATION_BOUNDS_H
#define LACC_ACCREDITATION_BOUNDS_H

#include <cstddef>
#include <cstdint>
#include <string>

namespace lacc {

enum class SoundnessLemma { Lemma2, Lemma3, Lemma4 };

/// Cancellation bound beta and the matching single-trap detection soundness.
struct SoundnessParams {
    double beta = 0.5;
    double soundness = 0.75;
    SoundnessLemma lemma = SoundnessLemma::Lemma3;

    static SoundnessParams lemma2();
    static SoundnessParams lemma3();
    static SoundnessParams lemma4();
    /// Accepts beta values 0, 0.5, 0.875.
    static SoundnessParams from_beta(double beta);
    /// Accepts "lemma2", "lemma3", "lemma4".
    static SoundnessParams from_string(const std::string &name);
};

std::string to_string(SoundnessLemma lemma);

/// Smallest M with M > (2 / eps^2) ln(4 / (1 - alpha)).
uint64_t required_traps(double epsilon, double alpha);

/// Accuracy reached by m traps at confidence alpha: sqrt(2 ln(4 / (1 - alpha)) / m).
double achieved_epsilon(uint64_t m, double alpha);

/// gamma = 2 p_inc / (1 - beta).
double gamma_from_counts(uint64_t n_inc, uint64_t m, double beta);

/// |<O>_exp - <O>_ideal| <= 2 gamma ||O||.
double expectation_error_bound(double gamma, double operator_norm);

/// 1 - F <= gamma.
double infidelity_bound(double gamma);

struct EntropyBound {
    double value = 0;
    /// gamma lies past the maximum of the formula; the maximum was returned.
    bool saturated = false;
};

/// -(1/n) log2(1 - 2 gamma + gamma^2 (1 + 2^-n)), held at its maximum past the peak.
EntropyBound entropy_density_bound(double gamma, size_t n);

constexpr double kMitigationExponent = 0.8503;

/// 1 - exp(-0.8503).
double mitigation_threshold();

bool mitigation_efficiency_check(double gamma);

}  // namespace lacc

#endif
