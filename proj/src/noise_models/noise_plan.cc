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

#include "lacc/noise_models/noise_plan.h"

#include <cmath>
#include <stdexcept>

namespace lacc {

std::string to_string(LocationKind kind) {
    switch (kind) {
        case LocationKind::Prep:
            return "prep";
        case LocationKind::SingleQubit:
            return "single_qubit";
        case LocationKind::Entangling:
            return "entangling";
        case LocationKind::Magic:
            return "magic";
        case LocationKind::Idle:
            return "idle";
        case LocationKind::Boundary:
            return "boundary";
        case LocationKind::Measure:
            return "measure";
    }
    return "?";
}

uint32_t NoisePlan::intern(const PauliChannel &channel) {
    for (size_t k = 0; k < channels.size(); k++) {
        if (channels[k] == channel) {
            return (uint32_t)k;
        }
    }
    channels.push_back(channel);
    return (uint32_t)(channels.size() - 1);
}

StochasticPauliChannel NoisePlan::placed(size_t location) const {
    return {locations[location].qubits, channel_at(location)};
}

double NoisePlan::total_error_rate() const {
    double log_ok = 0;
    for (const auto &loc : locations) {
        log_ok += std::log1p(-std::min(channels[loc.channel].total_error_rate(), 1.0));
    }
    return -std::expm1(log_ok);
}

namespace {

struct PlanBuilder {
    NoisePlan plan;
    double clifford_rate;
    double magic_rate;

    void add(size_t layer, int32_t op, uint32_t rep, LocationKind kind, std::vector<size_t> qubits, double rate) {
        NoiseLocation loc;
        loc.layer = layer;
        loc.op = op;
        loc.rep = rep;
        loc.kind = kind;
        loc.channel = plan.intern(PauliChannel::depolarizing(rate, qubits.size()));
        loc.qubits = std::move(qubits);
        plan.locations.push_back(std::move(loc));
    }

    void per_qubit(size_t layer, LocationKind kind, double rate) {
        for (size_t q = 0; q < plan.n; q++) {
            add(layer, -1, 0, kind, {q}, rate);
        }
    }
};

}  // namespace

NoisePlan build_noise_plan(const LogicalCircuit &circuit, const NoiseSpec &spec) {
    spec.regime.validate();
    PlanBuilder b;
    b.plan.n = circuit.n;
    b.clifford_rate = spec.regime.clifford_rate();
    b.magic_rate = spec.regime.magic_rate();
    bool per_qubit = spec.locality == NoiseLocality::PerQubit;

    if (spec.spam) {
        b.per_qubit(NoiseLocation::kPrep, LocationKind::Prep, b.clifford_rate);
    }
    for (size_t li = 0; li < circuit.layers.size(); li++) {
        const GateLayer &layer = circuit.layers[li];
        switch (layer.kind) {
            case LayerKind::SingleQubitClifford:
                b.per_qubit(li, LocationKind::SingleQubit, b.clifford_rate);
                break;
            case LayerKind::HadamardBoundary:
                if (spec.boundary) {
                    b.per_qubit(li, LocationKind::Boundary, b.clifford_rate);
                }
                break;
            case LayerKind::PauliTwirl:
                break;
            case LayerKind::Measurement:
                if (spec.spam) {
                    b.per_qubit(li, LocationKind::Measure, b.clifford_rate);
                }
                break;
            case LayerKind::Entangling: {
                std::vector<uint8_t> busy(circuit.n, 0);
                auto op_locations = [&](int32_t oi, uint32_t rep) {
                    const EntanglingOp &op = layer.ops[oi];
                    double rate = op.magic ? b.magic_rate : b.clifford_rate;
                    LocationKind kind = op.magic ? LocationKind::Magic : LocationKind::Entangling;
                    uint32_t copies = op.magic ? std::max<uint32_t>(op.magic_states, 1) : 1;
                    for (uint32_t c = 0; c < copies; c++) {
                        if (per_qubit) {
                            for (size_t q : op.qubits) {
                                b.add(li, oi, rep, kind, {q}, rate);
                            }
                        } else {
                            b.add(li, oi, rep, kind, op.qubits, rate);
                        }
                    }
                };
                for (size_t oi = 0; oi < layer.ops.size(); oi++) {
                    op_locations((int32_t)oi, 0);
                    for (size_t q : layer.ops[oi].qubits) {
                        busy[q] = 1;
                    }
                }
                for (size_t q = 0; q < circuit.n; q++) {
                    if (!busy[q]) {
                        b.add(li, -1, 0, LocationKind::Idle, {q}, b.clifford_rate);
                    }
                }
                for (size_t oi = 0; oi < layer.ops.size(); oi++) {
                    for (uint32_t r = 1; r < layer.ops[oi].repetitions; r++) {
                        op_locations((int32_t)oi, r);
                    }
                }
                break;
            }
        }
    }
    return b.plan;
}

double total_error_rate(const std::vector<double> &rates) {
    double log_ok = 0;
    for (double q : rates) {
        if (!(q >= 0 && q <= 1)) {
            throw std::invalid_argument("total_error_rate: rate outside [0, 1]");
        }
        log_ok += std::log1p(-q);
    }
    return -std::expm1(log_ok);
}

double total_error_rate(const std::vector<StochasticPauliChannel> &channels) {
    std::vector<double> rates;
    rates.reserve(channels.size());
    for (const auto &c : channels) {
        rates.push_back(c.total_error_rate());
    }
    return total_error_rate(rates);
}

}  // namespace lacc
