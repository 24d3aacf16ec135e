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

#ifndef LACC_NOISE_MODELS_NOISE_PLAN_H
#define LACC_NOISE_MODELS_NOISE_PLAN_H

#include <cstdint>
#include <limits>
#include <vector>

#include "lacc/circuit_ir/circuit.h"
#include "lacc/noise_models/channel.h"
#include "lacc/noise_models/regime.h"

namespace lacc {

enum class LocationKind { Prep, SingleQubit, Entangling, Magic, Idle, Boundary, Measure };

std::string to_string(LocationKind kind);

/// A channel placed after the gates of one layer (or after preparation).
struct NoiseLocation {
    static constexpr size_t kPrep = std::numeric_limits<size_t>::max();

    size_t layer = kPrep;
    /// Entangling op index the channel belongs to, -1 for per-qubit channels.
    int32_t op = -1;
    /// Attempt index for repeated (RUS) gates.
    uint32_t rep = 0;
    LocationKind kind = LocationKind::SingleQubit;
    std::vector<size_t> qubits;
    uint32_t channel = 0;
};

enum class NoiseLocality {
    /// One channel per gate over its support; idle qubits get single-qubit channels.
    PerGate,
    /// One single-qubit channel per qubit per layer.
    PerQubit,
};

struct NoiseSpec {
    RegimeConfig regime;
    NoiseLocality locality = NoiseLocality::PerGate;
    /// Channels after preparation and before measurement.
    bool spam = true;
    /// Channels on the boundary Hadamard layers of traps.
    bool boundary = true;
};

/// Channels of one circuit in program order.
struct NoisePlan {
    size_t n = 0;
    std::vector<PauliChannel> channels;
    std::vector<NoiseLocation> locations;

    /// Returns the index of an equal channel, adding it if new.
    uint32_t intern(const PauliChannel &channel);
    const PauliChannel &channel_at(size_t location) const {
        return channels[locations[location].channel];
    }
    StochasticPauliChannel placed(size_t location) const;
    double total_error_rate() const;
};

/// Builds channels for every location of the circuit under the regime rates.
NoisePlan build_noise_plan(const LogicalCircuit &circuit, const NoiseSpec &spec);

/// p_err = 1 - prod_j (1 - q_j).
double total_error_rate(const std::vector<double> &rates);
double total_error_rate(const std::vector<StochasticPauliChannel> &channels);

}  // namespace lacc

#endif
