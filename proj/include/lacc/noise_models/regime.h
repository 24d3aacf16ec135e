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

#ifndef LACC_NOISE_MODELS_REGIME_H
#define LACC_NOISE_MODELS_REGIME_H

#include <optional>
#include <string>

namespace lacc {

enum class Regime { NISQ, PFTQC, FTQC };

std::string to_string(Regime regime);
Regime regime_from_string(const std::string &s);

/// Surface-code logical error law 0.03 (p / 0.01)^((d + 1) / 2), clamped to 1.
double logical_error_rate(double p_phys, int d);

constexpr double kSurfaceCodeThreshold = 0.01;
constexpr double kSurfaceCodePrefactor = 0.03;

struct RegimeConfig {
    Regime regime = Regime::FTQC;
    double p_phys = 1e-3;
    int distance = 11;
    /// Error rate of magic-state fed gates, overriding the regime default.
    std::optional<double> t_gate_error;

    /// Throws std::invalid_argument for out-of-range parameters.
    void validate() const;
    /// Rate charged at Clifford locations.
    double clifford_rate() const;
    /// Rate charged at locations fed by magic states.
    double magic_rate() const;
};

}  // namespace lacc

#endif
