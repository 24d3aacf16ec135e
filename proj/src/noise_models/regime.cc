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

#include "lacc/noise_models/regime.h"

#include <cmath>
#include <stdexcept>

namespace lacc {

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::NISQ:
            return "NISQ";
        case Regime::PFTQC:
            return "PFTQC";
        case Regime::FTQC:
            return "FTQC";
    }
    return "?";
}

Regime regime_from_string(const std::string &s) {
    if (s == "NISQ" || s == "nisq") {
        return Regime::NISQ;
    }
    if (s == "PFTQC" || s == "pftqc") {
        return Regime::PFTQC;
    }
    if (s == "FTQC" || s == "ftqc") {
        return Regime::FTQC;
    }
    throw std::invalid_argument("unknown regime '" + s + "'");
}

double logical_error_rate(double p_phys, int d) {
    if (!(p_phys > 0 && p_phys < 1)) {
        throw std::invalid_argument("logical_error_rate: p_phys must lie in (0, 1)");
    }
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("logical_error_rate: distance must be odd and at least 3");
    }
    double p = kSurfaceCodePrefactor * std::pow(p_phys / kSurfaceCodeThreshold, (d + 1) / 2);
    return std::min(p, 1.0);
}

void RegimeConfig::validate() const {
    if (!(p_phys >= 0 && p_phys < 1)) {
        throw std::invalid_argument("p_phys must lie in [0, 1)");
    }
    if (regime != Regime::NISQ && (distance < 3 || distance % 2 == 0)) {
        throw std::invalid_argument("distance must be odd and at least 3");
    }
    if (t_gate_error && !(*t_gate_error >= 0 && *t_gate_error <= 1)) {
        throw std::invalid_argument("t_gate_error must lie in [0, 1]");
    }
}

double RegimeConfig::clifford_rate() const {
    if (regime == Regime::NISQ || p_phys == 0) {
        return p_phys;
    }
    return logical_error_rate(p_phys, distance);
}

double RegimeConfig::magic_rate() const {
    if (t_gate_error) {
        return *t_gate_error;
    }
    switch (regime) {
        case Regime::NISQ:
        case Regime::PFTQC:
            return p_phys;
        case Regime::FTQC:
            return clifford_rate();
    }
    return p_phys;
}

}  // namespace lacc
